#include "skillsim/parser.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "skillsim/errors.hpp"
#include "skillsim/tokenize.hpp"

namespace skillsim {

const YamlEntry* yaml_find(const YamlMap& yaml, std::string_view key) {
  for (const auto& e : yaml)
    if (e.key == key) return &e;
  return nullptr;
}

namespace {

// One source line including its trailing newline (the last line may lack one).
std::vector<std::string_view> split_lines(std::string_view raw) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    std::size_t nl = raw.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(raw.substr(pos));
      break;
    }
    lines.push_back(raw.substr(pos, nl - pos + 1));
    pos = nl + 1;
  }
  return lines;
}

std::string_view line_content(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  return line;
}

bool is_fence_line(std::string_view line) {
  std::string_view c = line_content(line);
  std::size_t i = 0;
  while (i < c.size() && (c[i] == ' ' || c[i] == '\t')) ++i;
  return c.size() - i >= 3 && c.substr(i, 3) == "```";
}

std::string_view fence_info(std::string_view line) {
  std::string_view c = line_content(line);
  std::size_t i = c.find("```");
  c = c.substr(i + 3);
  while (!c.empty() && std::isspace(static_cast<unsigned char>(c.front()))) c.remove_prefix(1);
  while (!c.empty() && std::isspace(static_cast<unsigned char>(c.back()))) c.remove_suffix(1);
  return c;
}

}  // namespace

std::string normalize_language_tag(std::string_view info) {
  // Tag = first word of the info string, lowercased.
  std::string tag;
  for (char ch : info) {
    if (std::isspace(static_cast<unsigned char>(ch))) break;
    tag.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (tag == "sh" || tag == "shell") return "bash";
  if (tag == "js") return "javascript";
  if (tag == "py") return "python";
  if (tag == "yml") return "yaml";
  return tag;
}

std::vector<Segment> segment_document(std::string_view raw) {
  std::vector<Segment> segments;
  auto lines = split_lines(raw);
  std::size_t i = 0;

  // Frontmatter only when line 1 is exactly --- and a closing --- exists.
  if (!lines.empty() && line_content(lines[0]) == "---") {
    std::size_t close = 0;
    for (std::size_t j = 1; j < lines.size(); ++j) {
      if (line_content(lines[j]) == "---") {
        close = j;
        break;
      }
    }
    if (close > 0) {
      Segment seg;
      seg.kind = Segment::Kind::Frontmatter;
      for (std::size_t j = 0; j <= close; ++j) seg.text.append(lines[j]);
      segments.push_back(std::move(seg));
      i = close + 1;
    }
  }

  std::string body_run;
  auto flush_body = [&] {
    if (body_run.empty()) return;
    Segment seg;
    seg.kind = Segment::Kind::Body;
    seg.text = std::move(body_run);
    body_run.clear();
    segments.push_back(std::move(seg));
  };

  while (i < lines.size()) {
    if (is_fence_line(lines[i])) {
      flush_body();
      Segment seg;
      seg.kind = Segment::Kind::Fence;
      seg.open_line = std::string(lines[i]);
      seg.fence_info = std::string(fence_info(lines[i]));
      ++i;
      while (i < lines.size() && !is_fence_line(lines[i])) {
        seg.fence_body.append(lines[i]);
        ++i;
      }
      if (i < lines.size()) {
        seg.close_line = std::string(lines[i]);
        ++i;
      }
      seg.text = seg.open_line + seg.fence_body + seg.close_line;
      segments.push_back(std::move(seg));
    } else {
      body_run.append(lines[i]);
      ++i;
    }
  }
  flush_body();
  return segments;
}

namespace {

std::string yaml_scalar_to_string(const YAML::Node& node) {
  if (node.IsScalar()) return node.Scalar();
  // Non-scalar, non-sequence values are kept as their flow-style dump so the
  // field still contributes tokens.
  YAML::Emitter em;
  em.SetMapFormat(YAML::Flow);
  em.SetSeqFormat(YAML::Flow);
  em << node;
  return em.c_str() ? em.c_str() : "";
}

YamlMap parse_frontmatter(const std::string& inner, std::string& warning) {
  YamlMap out;
  try {
    YAML::Node node = YAML::Load(inner);
    if (!node.IsMap()) {
      if (node.IsDefined() && !node.IsNull())
        warning = "frontmatter is not a key/value map";
      return out;
    }
    for (auto it = node.begin(); it != node.end(); ++it) {
      YamlEntry e;
      e.key = it->first.as<std::string>();
      if (it->second.IsSequence()) {
        e.is_list = true;
        for (const auto& item : it->second)
          e.items.push_back(yaml_scalar_to_string(item));
      } else {
        e.scalar = yaml_scalar_to_string(it->second);
      }
      out.push_back(std::move(e));
    }
  } catch (const YAML::Exception& ex) {
    out.clear();
    warning = std::string("frontmatter did not parse: ") + ex.what();
  }
  return out;
}

}  // namespace

SkillDocument parse_skill(const SkillRecord& record) {
  SkillDocument doc;
  doc.record = record;

  auto segments = segment_document(record.raw_text);
  for (const auto& seg : segments) {
    switch (seg.kind) {
      case Segment::Kind::Frontmatter: {
        doc.has_frontmatter = true;
        // Strip the two delimiter lines to get the YAML payload.
        auto lines = split_lines(seg.text);
        std::string inner;
        for (std::size_t j = 1; j + 1 < lines.size(); ++j) inner.append(lines[j]);
        doc.yaml = parse_frontmatter(inner, doc.yaml_warning);
        break;
      }
      case Segment::Kind::Fence: {
        CodeBlock b;
        b.language = normalize_language_tag(seg.fence_info);
        b.body = seg.fence_body;
        doc.code_blocks.push_back(std::move(b));
        break;
      }
      case Segment::Kind::Body:
        doc.nl_body.append(seg.text);
        break;
    }
  }

  // Raw structural features; min-max normalization happens corpus-wide.
  double word_count = static_cast<double>(word_tokens(record.raw_text, 1).size());
  double block_count = static_cast<double>(doc.code_blocks.size());
  double code_bytes = 0;
  std::set<std::string> languages;
  for (const auto& b : doc.code_blocks) {
    code_bytes += static_cast<double>(b.body.size());
    if (!b.language.empty()) languages.insert(b.language);
  }
  double total_bytes = static_cast<double>(record.raw_text.size());
  double ratio = total_bytes > 0 ? code_bytes / total_bytes : 0.0;
  double avg_block_len = block_count > 0 ? code_bytes / block_count : 0.0;
  const YamlEntry* desc = yaml_find(doc.yaml, "description");
  double desc_len = desc ? static_cast<double>(desc->scalar.size()) : 0.0;

  doc.features_raw = {word_count,
                      block_count,
                      ratio,
                      avg_block_len,
                      static_cast<double>(languages.size()),
                      doc.has_frontmatter ? 1.0 : 0.0,
                      static_cast<double>(doc.yaml.size()),
                      desc_len};
  return doc;
}

std::vector<SkillDocument> parse_corpus(const Corpus& corpus) {
  std::vector<SkillDocument> docs;
  docs.reserve(corpus.size());
  for (const auto& r : corpus.records) docs.push_back(parse_skill(r));
  return docs;
}

std::size_t meaningful_token_count(const SkillDocument& doc) {
  std::size_t n = tokenize_nl(doc.nl_body).size();
  if (const YamlEntry* desc = yaml_find(doc.yaml, "description"))
    n += tokenize_nl(desc->scalar).size();
  return n;
}

BoilerplatePartition filter_boilerplate(std::vector<SkillDocument> docs) {
  BoilerplatePartition part;
  for (auto& doc : docs) {
    if (meaningful_token_count(doc) >= 5)
      part.kept.push_back(std::move(doc));
    else
      part.dropped.push_back(std::move(doc));
  }
  return part;
}

std::vector<StructuralFeatures> normalize_features(
    const std::vector<SkillDocument>& docs) {
  if (docs.empty()) throw ConfigError("normalize_features: empty document list");
  StructuralFeatures lo, hi;
  lo.fill(std::numeric_limits<double>::infinity());
  hi.fill(-std::numeric_limits<double>::infinity());
  for (const auto& doc : docs) {
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      lo[k] = std::min(lo[k], doc.features_raw[k]);
      hi[k] = std::max(hi[k], doc.features_raw[k]);
    }
  }
  std::vector<StructuralFeatures> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      double range = hi[k] - lo[k];
      out[i][k] = range > 0 ? (docs[i].features_raw[k] - lo[k]) / range : 0.0;
    }
  }
  return out;
}

}  // namespace skillsim
