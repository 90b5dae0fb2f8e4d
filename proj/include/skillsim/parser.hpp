#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "skillsim/corpus.hpp"

namespace skillsim {

inline constexpr std::size_t kFeatureCount = 8;

// Order is fixed; normalized values feed structural similarity.
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "word_count",       "code_block_count", "code_to_text_ratio",
    "avg_code_block_len", "unique_language_count", "has_frontmatter",
    "yaml_field_count", "description_len"};

struct CodeBlock {
  std::string language;  // normalized: lowercased, trimmed, aliased (py -> python)
  std::string body;      // excludes the fence lines
};

struct YamlEntry {
  std::string key;
  std::string scalar;               // set when !is_list
  std::vector<std::string> items;   // set when is_list
  bool is_list = false;
};

// Insertion-ordered view of the frontmatter map.
using YamlMap = std::vector<YamlEntry>;

const YamlEntry* yaml_find(const YamlMap& yaml, std::string_view key);

struct SkillDocument {
  SkillRecord record;
  YamlMap yaml;
  std::string nl_body;  // body text with fenced regions removed
  std::vector<CodeBlock> code_blocks;
  std::array<double, kFeatureCount> features_raw{};
  bool has_frontmatter = false;
  std::string yaml_warning;  // nonempty when frontmatter existed but did not parse
};

// Line-level segmentation of a document. Rebuilding by concatenating
// segment text reproduces the raw bytes exactly.
struct Segment {
  enum class Kind { Frontmatter, Fence, Body };
  Kind kind;
  std::string text;        // full byte span, fence lines included
  // Fence-only fields:
  std::string fence_info;  // raw info string after ```
  std::string fence_body;  // body bytes between the fence lines
  std::string open_line;
  std::string close_line;  // empty when the fence runs to EOF unclosed
};

std::vector<Segment> segment_document(std::string_view raw);

std::string normalize_language_tag(std::string_view info);

SkillDocument parse_skill(const SkillRecord& record);

std::vector<SkillDocument> parse_corpus(const Corpus& corpus);

// Meaningful tokens: lowercased alphanumeric runs of length >= 2, minus
// stopwords; counted across nl_body plus the YAML description field.
std::size_t meaningful_token_count(const SkillDocument& doc);

struct BoilerplatePartition {
  std::vector<SkillDocument> kept;
  std::vector<SkillDocument> dropped;
};

// Drops documents with fewer than five meaningful tokens.
BoilerplatePartition filter_boilerplate(std::vector<SkillDocument> docs);

using StructuralFeatures = std::array<double, kFeatureCount>;

// Corpus-wide min-max normalization; features with zero range map to 0.
std::vector<StructuralFeatures> normalize_features(
    const std::vector<SkillDocument>& docs);

bool is_stopword(std::string_view token);
const std::vector<std::string>& stopword_list();

}  // namespace skillsim
