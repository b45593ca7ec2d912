#include "bgreedy/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace bgreedy {

Eigen::MatrixXd uniform_grid_1d(int n) {
  if (n < 1) throw std::invalid_argument("grid size must be positive");
  Eigen::MatrixXd pts(n, 1);
  for (int i = 0; i < n; ++i) pts(i, 0) = static_cast<double>(i + 1) / (n + 1);
  return pts;
}

Eigen::MatrixXd dyadic_grid_1d(int level) {
  if (level < 1 || level > 30) throw std::invalid_argument("bad dyadic level");
  const int denom = 1 << level;
  Eigen::MatrixXd pts(denom - 1, 1);
  for (int i = 1; i < denom; ++i)
    pts(i - 1, 0) = static_cast<double>(i) / denom;
  return pts;
}

double min_separation(const Eigen::MatrixXd& pts) {
  const int n = static_cast<int>(pts.rows());
  if (n < 2) throw std::invalid_argument("separation needs at least two points");
  if (pts.cols() == 1) {
    std::vector<double> xs(pts.col(0).data(), pts.col(0).data() + n);
    std::sort(xs.begin(), xs.end());
    double q = std::numeric_limits<double>::infinity();
    for (int i = 1; i < n; ++i) q = std::min(q, xs[i] - xs[i - 1]);
    return q;
  }
  double q = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      q = std::min(q, (pts.row(i) - pts.row(j)).norm());
  return q;
}

bool pairwise_distinct(const Eigen::MatrixXd& pts) {
  return pts.rows() < 2 || min_separation(pts) > 0.0;
}

Eigen::MatrixXd from_values_1d(const std::vector<double>& xs) {
  Eigen::MatrixXd pts(static_cast<int>(xs.size()), 1);
  for (size_t i = 0; i < xs.size(); ++i) pts(static_cast<int>(i), 0) = xs[i];
  return pts;
}

}  // namespace bgreedy
