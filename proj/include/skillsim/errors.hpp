#pragma once

#include <stdexcept>
#include <string>

namespace skillsim {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data (bad JSONL line, bad container magic, ...).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller violated an operation contract (mismatched corpora, bad flag value).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TrainingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skillsim
