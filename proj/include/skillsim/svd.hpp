#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "skillsim/sparse.hpp"

namespace skillsim {

struct TruncatedSvd {
  Eigen::MatrixXd projection;       // V x d, right singular vectors
  Eigen::VectorXd singular_values;  // d
  int d = 0;
};

// Randomized truncated SVD (range finder with oversampling 10 and 2 power
// iterations). The requested dimension is clamped to min(rows, cols).
// Sign convention: the largest-magnitude entry of every right singular
// vector is made positive, so results are reproducible across runs.
TruncatedSvd randomized_svd(const SparseMatrix& m, int d, uint64_t seed);

// A * dense (rows of `a` against columns of `dense`).
Eigen::MatrixXd sparse_times_dense(const SparseMatrix& a, const Eigen::MatrixXd& dense);

// A^T * dense.
Eigen::MatrixXd sparse_t_times_dense(const SparseMatrix& a, const Eigen::MatrixXd& dense);

void fix_svd_signs(Eigen::MatrixXd& projection);

}  // namespace skillsim
