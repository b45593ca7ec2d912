#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>

namespace bgreedy {

enum class KernelFamily {
  BrownianBridge,
  IteratedBrownianBridge,
  Gaussian,
  Matern,
};

KernelFamily kernel_family_from_string(const std::string& name);
std::string kernel_family_to_string(KernelFamily family);

// Axis-aligned box domain. The bridge kernels live on the open interval
// (0,1); grids built by this library exclude the endpoints.
struct Domain {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  bool open = true;

  static Domain unit_interval();
  static Domain unit_box(int dim);

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Eigen::VectorXd& x) const;
};

/// A strictly positive definite kernel with its parameters.
/// Immutable after construction, safe to share across threads.
struct Kernel {
  KernelFamily family = KernelFamily::BrownianBridge;
  double shape = 1.0;        // length scale, unused by the bridge kernels
  double smoothness = 1.5;   // Matern nu, one of 1/2, 3/2, 5/2
  int dim = 1;
  double scale = 1.0;        // multiplier applied to all evaluations
  Domain domain = Domain::unit_interval();

  static Kernel brownian_bridge();
  static Kernel iterated_brownian_bridge();
  static Kernel gaussian(double shape, int dim = 1);
  static Kernel matern(double nu, double shape, int dim = 1);
};

/// k(x, y), including the scale factor. Throws std::invalid_argument if a
/// point is outside the domain.
double eval(const Kernel& kernel, const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// 1-d convenience overload.
double eval(const Kernel& kernel, double x, double y);

/// Column vector (k(x, p_i))_i for all points p of a set.
Eigen::VectorXd eval_column(const Kernel& kernel, const Eigen::MatrixXd& pts,
                            const Eigen::VectorXd& x);

/// Diagonal values k(p_i, p_i).
Eigen::VectorXd eval_diag(const Kernel& kernel, const Eigen::MatrixXd& pts);

/// Gram matrix A_ij = k(p_i, p_j). Only the lower triangle is computed and
/// mirrored, so symmetry is exact. Throws on duplicate points.
Eigen::MatrixXd gram(const Kernel& kernel, const Eigen::MatrixXd& pts);

/// Returns a copy rescaled so that max_i k(p_i, p_i) = 1 if the current
/// maximum over the grid exceeds 1; otherwise returns the kernel unchanged.
Kernel normalize(const Kernel& kernel, const Eigen::MatrixXd& grid);

}  // namespace bgreedy
