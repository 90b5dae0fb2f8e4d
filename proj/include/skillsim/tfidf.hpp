#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "skillsim/sparse.hpp"

namespace skillsim {

struct Vocabulary {
  std::vector<std::string> terms;  // column order (lexicographic)
  std::unordered_map<std::string, uint32_t> term_to_col;
  std::vector<double> idf;

  std::size_t size() const { return terms.size(); }
};

// Vocabulary over tokenized documents, capped to the `cap` highest-df terms
// (ties broken lexicographically), columns in lexicographic term order.
// idf(t) = ln((1+N)/(1+df)) + 1.
Vocabulary build_vocabulary(const std::vector<std::vector<std::string>>& docs,
                            std::size_t cap);

// Rows are raw term count * idf, L2-normalized; all-zero rows stay zero.
SparseMatrix tfidf_matrix(const std::vector<std::vector<std::string>>& docs,
                          const Vocabulary& vocab);

SparseVec tfidf_row(const std::vector<std::string>& tokens, const Vocabulary& vocab);

}  // namespace skillsim
