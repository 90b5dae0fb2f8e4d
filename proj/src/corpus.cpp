#include "skillsim/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skillsim/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace skillsim {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw IoError("sha256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out(len * 2, '0');
  for (unsigned int i = 0; i < len; ++i) {
    out[2 * i] = hex[digest[i] >> 4];
    out[2 * i + 1] = hex[digest[i] & 0xf];
  }
  return out;
}

long Corpus::index_of(const std::string& id) const {
  auto it = id_to_index_.find(id);
  return it == id_to_index_.end() ? -1 : static_cast<long>(it->second);
}

void Corpus::rebuild_index() {
  id_to_index_.clear();
  by_hash.clear();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    if (!id_to_index_.emplace(r.id, i).second)
      throw ParseError("duplicate record id: " + r.id);
    by_hash[r.content_hash].push_back(r.id);
  }
}

Corpus make_corpus(std::vector<SkillRecord> records) {
  Corpus c;
  c.records = std::move(records);
  for (auto& r : c.records) r.content_hash = sha256_hex(r.raw_text);
  c.stats.loaded = c.records.size();
  c.rebuild_index();
  return c;
}

static SkillRecord record_from_json(const json& j, std::size_t line_no) {
  SkillRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.raw_text = j.at("raw_text").get<std::string>();
    r.author = j.value("author", "");
    r.name = j.value("name", "");
    r.category = j.value("category", "");
  } catch (const json::exception& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
  return r;
}

static Corpus load_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  std::vector<SkillRecord> records;
  std::size_t dropped = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    SkillRecord r = record_from_json(j, line_no);
    if (r.raw_text.empty()) {
      ++dropped;
      continue;
    }
    records.push_back(std::move(r));
  }
  Corpus c = make_corpus(std::move(records));
  c.stats.dropped_empty = dropped;
  return c;
}

static Corpus load_directory(const std::string& path) {
  if (!fs::is_directory(path)) throw IoError("not a directory: " + path);
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".md")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SkillRecord> records;
  std::size_t dropped = 0;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + f.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    SkillRecord r;
    r.id = fs::relative(f, path).generic_string();
    r.name = f.stem().string();
    r.raw_text = ss.str();
    if (r.raw_text.empty()) {
      ++dropped;
      continue;
    }
    records.push_back(std::move(r));
  }
  Corpus c = make_corpus(std::move(records));
  c.stats.dropped_empty = dropped;
  return c;
}

Corpus load_corpus(const std::string& path, CorpusFormat format) {
  return format == CorpusFormat::Jsonl ? load_jsonl(path) : load_directory(path);
}

void write_corpus_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path);
  for (const auto& r : corpus.records) {
    json j;
    j["id"] = r.id;
    j["author"] = r.author;
    j["name"] = r.name;
    j["category"] = r.category;
    j["raw_text"] = r.raw_text;
    out << j.dump() << "\n";
  }
}

std::vector<DuplicateGroup> exact_duplicates(const Corpus& corpus) {
  std::vector<DuplicateGroup> groups;
  for (const auto& [hash, ids] : corpus.by_hash) {
    if (ids.size() >= 2) groups.push_back({hash, ids});
  }
  return groups;
}

std::size_t deduped_count(const Corpus& corpus) {
  std::size_t removed = 0;
  for (const auto& [hash, ids] : corpus.by_hash) removed += ids.size() - 1;
  return corpus.size() - removed;
}

}  // namespace skillsim
