#pragma once

#include <Eigen/Dense>

namespace bgreedy {

// Point sets are dense matrices with one point per row.

/// n equally spaced interior points i/(n+1), i = 1..n, of (0,1).
Eigen::MatrixXd uniform_grid_1d(int n);

/// Interior dyadic grid i/2^level, i = 1..2^level-1. Contains every point
/// (2i+1)/2^l for l <= level exactly.
Eigen::MatrixXd dyadic_grid_1d(int level);

/// Minimum pairwise distance; requires at least two points.
double min_separation(const Eigen::MatrixXd& pts);

/// True if all pairwise distances are positive.
bool pairwise_distinct(const Eigen::MatrixXd& pts);

Eigen::MatrixXd from_values_1d(const std::vector<double>& xs);

}  // namespace bgreedy
