#include "skillsim/tokenize.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace skillsim {

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::Yaml: return "yaml";
    case Channel::Nl: return "nl";
    case Channel::Code: return "code";
    case Channel::Flat: return "flat";
  }
  return "?";
}

std::vector<std::string> word_tokens(std::string_view text, std::size_t min_len) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (cur.size() >= min_len) tokens.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u))
      cur.push_back(static_cast<char>(std::tolower(u)));
    else
      flush();
  }
  flush();
  return tokens;
}

std::vector<std::string> tokenize_nl(std::string_view text) {
  std::vector<std::string> tokens = word_tokens(text, 2);
  tokens.erase(std::remove_if(tokens.begin(), tokens.end(),
                              [](const std::string& t) { return is_stopword(t); }),
               tokens.end());
  return tokens;
}

std::vector<std::string> tokenize_flat(std::string_view text) {
  return word_tokens(text, 2);
}

std::vector<std::string> tokenize_yaml(const YamlMap& yaml) {
  std::vector<const YamlEntry*> entries;
  entries.reserve(yaml.size());
  for (const auto& e : yaml) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const YamlEntry* a, const YamlEntry* b) { return a->key < b->key; });

  std::vector<std::string> tokens;
  for (const YamlEntry* e : entries) {
    for (auto& t : word_tokens(e->key, 1)) tokens.push_back(std::move(t));
    if (e->is_list) {
      for (const auto& item : e->items)
        for (auto& t : word_tokens(item, 1)) tokens.push_back(std::move(t));
    } else {
      for (auto& t : word_tokens(e->scalar, 1)) tokens.push_back(std::move(t));
    }
  }
  return tokens;
}

namespace {

// Operators kept as standalone tokens; matched greedily left to right.
constexpr std::array<std::string_view, 9> kOperators = {
    "|>", "=>", "->", "==", "!=", ">=", "<=", "&&", "||"};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

// Splits an identifier on snake_case and camelCase boundaries, lowercased.
void split_identifier(std::string_view ident, std::vector<std::string>& out) {
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (std::size_t i = 0; i < ident.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(ident[i]);
    if (c == '_') {
      flush();
      continue;
    }
    if (std::isupper(c) && !cur.empty() &&
        std::islower(static_cast<unsigned char>(cur.back()))) {
      flush();
    }
    cur.push_back(static_cast<char>(std::tolower(c)));
  }
  flush();
}

}  // namespace

std::vector<std::string> tokenize_code(const std::vector<CodeBlock>& blocks) {
  std::vector<std::string> tokens;
  for (const auto& block : blocks) {
    tokens.push_back("__lang_" + block.language + "__");
    const std::string& body = block.body;
    std::size_t i = 0;
    while (i < body.size()) {
      unsigned char c = static_cast<unsigned char>(body[i]);
      if (ident_start(c)) {
        std::size_t j = i + 1;
        while (j < body.size() && ident_char(static_cast<unsigned char>(body[j])))
          ++j;
        split_identifier(std::string_view(body).substr(i, j - i), tokens);
        i = j;
        continue;
      }
      if (std::isdigit(c)) {
        std::size_t j = i + 1;
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j])))
          ++j;
        tokens.emplace_back(body.substr(i, j - i));
        i = j;
        continue;
      }
      bool matched = false;
      for (std::string_view op : kOperators) {
        if (body.compare(i, op.size(), op) == 0) {
          tokens.emplace_back(op);
          i += op.size();
          matched = true;
          break;
        }
      }
      if (!matched) ++i;
    }
  }
  return tokens;
}

std::vector<std::string> channel_tokens(const SkillDocument& doc, Channel channel) {
  switch (channel) {
    case Channel::Yaml: return tokenize_yaml(doc.yaml);
    case Channel::Nl: return tokenize_nl(doc.nl_body);
    case Channel::Code: return tokenize_code(doc.code_blocks);
    case Channel::Flat: return tokenize_flat(doc.record.raw_text);
  }
  return {};
}

}  // namespace skillsim
