#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace skillsim {

// Sparse row: (column, value) pairs sorted by column.
using SparseVec = std::vector<std::pair<uint32_t, double>>;

inline double sparse_dot(const SparseVec& a, const SparseVec& b) {
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      dot += a[i].second * b[j].second;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return dot;
}

inline double sparse_norm(const SparseVec& a) {
  double s = 0.0;
  for (const auto& [idx, v] : a) s += v * v;
  return std::sqrt(s);
}

inline double sparse_cosine(const SparseVec& a, const SparseVec& b) {
  double na = sparse_norm(a), nb = sparse_norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return sparse_dot(a, b) / (na * nb);
}

struct SparseMatrix {
  std::vector<SparseVec> rows;
  std::size_t cols = 0;

  std::size_t nrows() const { return rows.size(); }
};

}  // namespace skillsim
