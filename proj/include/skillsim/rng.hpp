#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace skillsim {

// All randomness in the pipeline flows from one root seed through named
// sub-streams, so that e.g. index fitting and benchmark generation stay
// reproducible independently of each other.

inline constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t derive_seed(uint64_t root, std::string_view stream) {
  return splitmix64(root ^ fnv1a64(stream));
}

inline std::mt19937_64 make_rng(uint64_t root, std::string_view stream) {
  return std::mt19937_64(derive_seed(root, stream));
}

}  // namespace skillsim
