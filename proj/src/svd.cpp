#include "skillsim/svd.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "skillsim/rng.hpp"

namespace skillsim {

Eigen::MatrixXd sparse_times_dense(const SparseMatrix& a, const Eigen::MatrixXd& dense) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.nrows(), dense.cols());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (const auto& [col, v] : a.rows[i]) out.row(i) += v * dense.row(col);
  }
  return out;
}

Eigen::MatrixXd sparse_t_times_dense(const SparseMatrix& a, const Eigen::MatrixXd& dense) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.cols, dense.cols());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (const auto& [col, v] : a.rows[i]) out.row(col) += v * dense.row(i);
  }
  return out;
}

namespace {

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(y.rows(), y.cols());
  q = qr.householderQ() * q;
  return q;
}

}  // namespace

void fix_svd_signs(Eigen::MatrixXd& projection) {
  for (int c = 0; c < projection.cols(); ++c) {
    int arg = 0;
    double best = -1.0;
    for (int r = 0; r < projection.rows(); ++r) {
      double mag = std::abs(projection(r, c));
      if (mag > best) {
        best = mag;
        arg = r;
      }
    }
    if (projection(arg, c) < 0) projection.col(c) = -projection.col(c);
  }
}

TruncatedSvd randomized_svd(const SparseMatrix& m, int d, uint64_t seed) {
  const int n = static_cast<int>(m.nrows());
  const int v = static_cast<int>(m.cols);
  TruncatedSvd result;
  result.d = std::max(0, std::min({d, n, v}));
  if (result.d == 0) {
    result.projection = Eigen::MatrixXd::Zero(v, 0);
    result.singular_values = Eigen::VectorXd::Zero(0);
    return result;
  }

  constexpr int kOversample = 10;
  constexpr int kPowerIterations = 2;
  const int k = std::min(result.d + kOversample, std::min(n, v));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd omega(v, k);
  for (int r = 0; r < v; ++r)
    for (int c = 0; c < k; ++c) omega(r, c) = gauss(rng);

  Eigen::MatrixXd y = sparse_times_dense(m, omega);  // n x k
  for (int it = 0; it < kPowerIterations; ++it) {
    y = orthonormalize(y);
    Eigen::MatrixXd z = orthonormalize(sparse_t_times_dense(m, y));  // v x k
    y = sparse_times_dense(m, z);
  }
  Eigen::MatrixXd q = orthonormalize(y);  // n x k

  // B = Q^T A (k x v); its right singular vectors are A's.
  Eigen::MatrixXd bt = sparse_t_times_dense(m, q);  // v x k
  Eigen::MatrixXd gram = bt.transpose() * bt;       // k x k = B B^T

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success) throw std::runtime_error("svd: eigensolver failed");

  // Eigenvalues come back ascending; take the top d.
  result.projection = Eigen::MatrixXd::Zero(v, result.d);
  result.singular_values = Eigen::VectorXd::Zero(result.d);
  double sigma_max = std::sqrt(std::max(0.0, eig.eigenvalues()(k - 1)));
  for (int j = 0; j < result.d; ++j) {
    double lambda = std::max(0.0, eig.eigenvalues()(k - 1 - j));
    double sigma = std::sqrt(lambda);
    result.singular_values(j) = sigma;
    if (sigma > 1e-12 * sigma_max && sigma > 0.0)
      result.projection.col(j) = bt * (eig.eigenvectors().col(k - 1 - j) / sigma);
  }
  fix_svd_signs(result.projection);
  return result;
}

}  // namespace skillsim
