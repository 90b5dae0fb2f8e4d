#include "skillsim/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace skillsim {

Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::size_t cap) {
  // Document frequency per term; std::map keeps term order deterministic.
  std::map<std::string, std::size_t> df;
  for (const auto& tokens : docs) {
    std::map<std::string, bool> seen;
    for (const auto& t : tokens) {
      if (!seen.emplace(t, true).second) continue;
      ++df[t];
    }
  }

  std::vector<const std::pair<const std::string, std::size_t>*> entries;
  entries.reserve(df.size());
  for (const auto& e : df) entries.push_back(&e);
  if (entries.size() > cap) {
    std::sort(entries.begin(), entries.end(), [](auto* a, auto* b) {
      if (a->second != b->second) return a->second > b->second;
      return a->first < b->first;
    });
    entries.resize(cap);
  }

  Vocabulary vocab;
  vocab.terms.reserve(entries.size());
  for (auto* e : entries) vocab.terms.push_back(e->first);
  std::sort(vocab.terms.begin(), vocab.terms.end());

  double n_docs = static_cast<double>(docs.size());
  vocab.idf.resize(vocab.terms.size());
  vocab.term_to_col.reserve(vocab.terms.size());
  for (uint32_t col = 0; col < vocab.terms.size(); ++col) {
    vocab.term_to_col.emplace(vocab.terms[col], col);
    double d = static_cast<double>(df[vocab.terms[col]]);
    vocab.idf[col] = std::log((1.0 + n_docs) / (1.0 + d)) + 1.0;
  }
  return vocab;
}

SparseVec tfidf_row(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  std::map<uint32_t, double> counts;
  for (const auto& t : tokens) {
    auto it = vocab.term_to_col.find(t);
    if (it != vocab.term_to_col.end()) counts[it->second] += 1.0;
  }
  SparseVec row;
  row.reserve(counts.size());
  double norm_sq = 0.0;
  for (const auto& [col, count] : counts) {
    double v = count * vocab.idf[col];
    row.emplace_back(col, v);
    norm_sq += v * v;
  }
  if (norm_sq > 0.0) {
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& [col, v] : row) v *= inv;
  }
  return row;
}

SparseMatrix tfidf_matrix(const std::vector<std::vector<std::string>>& docs,
                          const Vocabulary& vocab) {
  SparseMatrix m;
  m.cols = vocab.size();
  m.rows.reserve(docs.size());
  for (const auto& tokens : docs) m.rows.push_back(tfidf_row(tokens, vocab));
  return m;
}

}  // namespace skillsim
