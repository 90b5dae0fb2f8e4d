#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace skillsim {

struct SkillRecord {
  std::string id;
  std::string author;    // may be empty ("unknown": never merged across records
  std::string name;
  std::string category;  // may be empty
  std::string raw_text;
  std::string content_hash;  // SHA-256 of raw_text bytes, lowercase hex
};

enum class CorpusFormat { Jsonl, Directory };

struct LoadStats {
  std::size_t loaded = 0;
  std::size_t dropped_empty = 0;
};

struct Corpus {
  std::vector<SkillRecord> records;
  // hash -> ids, in record order; groups partition the record set
  std::map<std::string, std::vector<std::string>> by_hash;
  LoadStats stats;

  std::size_t size() const { return records.size(); }
  const SkillRecord& at(std::size_t i) const { return records[i]; }
  // -1 if unknown
  long index_of(const std::string& id) const;

  void rebuild_index();

 private:
  std::unordered_map<std::string, std::size_t> id_to_index_;
};

std::string sha256_hex(const std::string& bytes);

// Builds a corpus from already-assembled records (hashes are recomputed).
Corpus make_corpus(std::vector<SkillRecord> records);

// JSONL: one record per line with fields {id, author, name, category, raw_text}.
// Directory: every *.md under the path is one record, id = relative path.
// Records with empty raw_text are dropped and counted in stats.
Corpus load_corpus(const std::string& path, CorpusFormat format);

void write_corpus_jsonl(const Corpus& corpus, const std::string& path);

struct DuplicateGroup {
  std::string hash;
  std::vector<std::string> ids;  // size >= 2
};

// Hash groups with >=2 members, ordered by hash. The "after exact dedup"
// count is corpus.size() - sum(group size - 1).
std::vector<DuplicateGroup> exact_duplicates(const Corpus& corpus);

std::size_t deduped_count(const Corpus& corpus);

}  // namespace skillsim
