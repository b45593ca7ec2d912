#include "bgreedy/target.hpp"

#include <cmath>
#include <stdexcept>

#include "bgreedy/kernel.hpp"

namespace bgreedy {

TargetFunction make_target(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::MatrixXd& candidates,
                           const Eigen::MatrixXd& eval_grid,
                           std::optional<double> native_norm) {
  TargetFunction t;
  t.values.resize(candidates.rows());
  for (int i = 0; i < candidates.rows(); ++i) t.values[i] = f(candidates.row(i).transpose());
  t.eval_values.resize(eval_grid.rows());
  for (int i = 0; i < eval_grid.rows(); ++i) t.eval_values[i] = f(eval_grid.row(i).transpose());
  t.native_norm = native_norm;
  return t;
}

double fp_eval(double p, double x) {
  if (p <= 0) throw std::domain_error("fp requires p > 0");
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp(2.0 * p * std::log(2.0) + p * std::log(x * (1.0 - x)));
}

double fp_h1_norm(double p) {
  if (p <= 0.5) throw std::domain_error("f_p is in H_1 only for p > 1/2");
  const double log_sq = std::log(2.0 * p * std::sqrt(M_PI) / (2.0 * p - 1.0)) +
                        std::lgamma(2.0 * p + 1.0) - std::lgamma(2.0 * p + 0.5);
  return std::exp(0.5 * log_sq);
}

double fp_h2_norm(double p) {
  if (p <= 1.5) throw std::domain_error("f_p is in H_2 only for p > 3/2");
  const double log_sq =
      std::log(48.0 * (p - 1.0) * p * p * std::sqrt(M_PI) / (2.0 * p - 3.0)) +
      std::lgamma(2.0 * p - 1.0) - std::lgamma(2.0 * p - 0.5);
  return std::exp(0.5 * log_sq);
}

TargetFunction fp_target(const Kernel& kernel, double p,
                         const Eigen::MatrixXd& candidates,
                         const Eigen::MatrixXd& eval_grid) {
  std::optional<double> norm;
  if (kernel.family == KernelFamily::BrownianBridge) {
    norm = fp_h1_norm(p);
  } else if (kernel.family == KernelFamily::IteratedBrownianBridge) {
    norm = fp_h2_norm(p);
  }
  auto f = [p](const Eigen::VectorXd& x) { return fp_eval(p, x[0]); };
  return make_target(f, candidates, eval_grid, norm);
}

TargetFunction expansion_target(const Kernel& kernel,
                                const Eigen::MatrixXd& centers,
                                const Eigen::VectorXd& coeffs,
                                const Eigen::MatrixXd& candidates,
                                const Eigen::MatrixXd& eval_grid) {
  if (centers.rows() != coeffs.size())
    throw std::invalid_argument("centers and coefficients are misaligned");
  const Eigen::MatrixXd a = gram(kernel, centers);
  const double norm2 = coeffs.dot(a * coeffs);
  auto f = [&](const Eigen::VectorXd& x) {
    return eval_column(kernel, centers, x).dot(coeffs);
  };
  return make_target(f, candidates, eval_grid, std::sqrt(norm2));
}

}  // namespace bgreedy
