#include "bgreedy/bb_oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace bgreedy::bb {

DyadicIndex dyadic_index(int n) {
  if (n < 1) throw std::invalid_argument("dyadic index needs n >= 1");
  int level = 1;
  while ((1 << level) <= n) ++level;  // 2^{level-1} <= n < 2^level
  return {level, n - (1 << (level - 1))};
}

Eigen::MatrixXd optimal_points(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  Eigen::MatrixXd pts(n, 1);
  for (int i = 1; i <= n; ++i) pts(i - 1, 0) = static_cast<double>(i) / (n + 1);
  return pts;
}

std::pair<double, double> optimal_errors(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const double m = n + 1;
  return {0.25 / (m * m), 1.0 / (m * std::sqrt(3.0))};
}

double fgreedy_point(int k) {
  const DyadicIndex d = dyadic_index(k);
  return static_cast<double>(2 * d.offset + 1) / (1 << d.level);
}

std::pair<double, double> fgreedy_errors(int n) {
  const DyadicIndex d = dyadic_index(n);
  const double linf = std::pow(2.0, -2.0 * d.level);
  const double native2 =
      (std::pow(2.0, 1.0 - 3.0 * d.level) / 3.0) *
      (std::pow(2.0, d.level + 1.0) - 3.0 * d.offset);
  return {linf, std::sqrt(native2)};
}

std::pair<double, double> ratio_bounds(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const double inv = 1.0 / (n + 1);
  return {std::sqrt(3.0) / (4.0 * std::sqrt(2.0)) * inv, std::sqrt(3.0) * inv};
}

double min_power_linf(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  return 0.5 / std::sqrt(static_cast<double>(n + 1));
}

}  // namespace bgreedy::bb
