#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skillsim/parser.hpp"

namespace skillsim {

enum class Channel { Yaml, Nl, Code, Flat };

const char* channel_name(Channel c);

// Lowercased alphanumeric runs of length >= min_len.
std::vector<std::string> word_tokens(std::string_view text, std::size_t min_len);

// NL channel: lowercased word tokens (>= 2 chars), stopwords removed.
std::vector<std::string> tokenize_nl(std::string_view text);

// Flat channel: the NL tokenizer without stopword removal, over raw text.
std::vector<std::string> tokenize_flat(std::string_view text);

// YAML channel: keys sorted lexicographically; each key is one token and
// each value word one token.
std::vector<std::string> tokenize_yaml(const YamlMap& yaml);

// Code channel: one __lang_<tag>__ token per block, identifiers split on
// camelCase/snake_case boundaries, plus preserved operators
// {|>, =>, ->, ==, !=, >=, <=, &&, ||}.
std::vector<std::string> tokenize_code(const std::vector<CodeBlock>& blocks);

std::vector<std::string> channel_tokens(const SkillDocument& doc, Channel channel);

}  // namespace skillsim
