#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "bgreedy/greedy.hpp"

namespace bgreedy {

/// Least-squares fit of log(value) against log(n) over a window.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int first = 0;  // window, indices into the input vectors
  int last = 0;
};

struct InequalityReport {
  std::string name;
  int first_index = 0;
  int last_index = 0;
  double max_violation = 0.0;  // positive means failure
  bool passed = false;
  bool checkable = true;
  std::string note;
};

/// Fill distance h_X, approximated as the max over a dense domain grid of
/// the distance to the nearest point of the set.
double fill_distance(const Eigen::MatrixXd& pts, const Eigen::MatrixXd& domain_grid);

/// Separation distance q_X (exact over pairs; needs >= 2 points).
double separation(const Eigen::MatrixXd& pts);

/// Uniformity rho = h_X / q_X.
double uniformity(const Eigen::MatrixXd& pts, const Eigen::MatrixXd& domain_grid);

/// log(det A) via Cholesky and lambda_min via a symmetric eigensolver.
/// Throws std::runtime_error naming the pivot on factorization failure.
std::pair<double, double> gram_diagnostics(const Eigen::MatrixXd& A);

/// (n! S_n)^{1/n} with S_n the unit-ball volume of R^n, via log-gamma.
/// Bounded by sqrt(5) n^{1/2} for all n.
double factor_bound(int n);

RateFit rate_fit(const std::vector<double>& ns, const std::vector<double>& values,
                 int first, int last);

/// Convenience: fit over the last three quarters of the samples in log
/// space, the standard window used for quoted slopes.
RateFit rate_fit_standard(const std::vector<double>& ns, const std::vector<double>& values);

struct CertifyInput {
  std::vector<ErrorRecord> records;
  GreedyConfig config;
  // state before the first selection; used for the i = 0 inequality cases
  double initial_linf = 0.0;       // max |f| over the candidate grid
  std::optional<double> native_norm;  // ||f||_{H_k}
};

/// Evaluates the per-run inequality certificates: the weak-selection
/// certificate, the two weak-selection residual bounds, the geometric-mean
/// product bound, and the paired-window proposition. Products are
/// accumulated in log space. Checks that need the native norm are skipped
/// when it is unknown; the entropy-number bound is reported as not
/// checkable, with the computable power product attached.
std::vector<InequalityReport> certify(const CertifyInput& input, double tol = 1e-9);

namespace detail {

// Newton pivot sequence P_{X_{i-1}}(x_i) and the LU determinant, templated
// so the determinant identity can be exercised at extended precision where
// double pivots underflow.
template <typename Scalar, typename KernelFn>
std::vector<Scalar> newton_pivots(const KernelFn& k, int n) {
  std::vector<std::vector<Scalar>> basis;
  std::vector<Scalar> power2(n), pivots;
  for (int i = 0; i < n; ++i) power2[i] = k(i, i);
  for (int step = 0; step < n; ++step) {
    Scalar p = sqrt(power2[step]);
    pivots.push_back(p);
    std::vector<Scalar> col(n);
    for (int j = 0; j < n; ++j) {
      Scalar v = k(j, step);
      for (const auto& b : basis) v -= b[step] * b[j];
      col[j] = v / p;
    }
    for (int j = 0; j < n; ++j) power2[j] -= col[j] * col[j];
    basis.push_back(std::move(col));
  }
  return pivots;
}

// log|det| by Gaussian elimination with partial pivoting.
template <typename Scalar>
Scalar lu_log_det(std::vector<std::vector<Scalar>> a) {
  const int n = static_cast<int>(a.size());
  Scalar log_det = 0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (abs(a[r][c]) > abs(a[piv][c])) piv = r;
    std::swap(a[c], a[piv]);
    log_det += log(abs(a[c][c]));
    for (int r = c + 1; r < n; ++r) {
      Scalar f = a[r][c] / a[c][c];
      for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return log_det;
}

}  // namespace detail

}  // namespace bgreedy
