#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>

#include "bgreedy/kernel.hpp"

namespace bgreedy {

/// Target values tabulated on the candidate and evaluation grids, plus the
/// exact native-space norm when it is known.
struct TargetFunction {
  Eigen::VectorXd values;       // on the candidate grid
  Eigen::VectorXd eval_values;  // on the evaluation grid
  std::optional<double> native_norm;
};

TargetFunction make_target(const std::function<double(const Eigen::VectorXd&)>& f,
                           const Eigen::MatrixXd& candidates,
                           const Eigen::MatrixXd& eval_grid,
                           std::optional<double> native_norm = std::nullopt);

/// f_p(x) = 2^{2p} (x(1-x))^p, normalized so that f_p(1/2) = 1.
double fp_eval(double p, double x);

/// ||f_p||_{H_1}^2 = 2p sqrt(pi)/(2p-1) * Gamma(2p+1)/Gamma(2p+1/2).
/// Requires p > 1/2.
double fp_h1_norm(double p);

/// ||f_p||_{H_2}^2 = 48(p-1)p^2 sqrt(pi)/(2p-3) * Gamma(2p-1)/Gamma(2p-1/2).
/// Requires p > 3/2.
double fp_h2_norm(double p);

/// Tabulates f_p on both grids with the native norm matching the kernel
/// family (H_1 for the bridge kernel, H_2 for the iterated one, unknown
/// otherwise). Throws std::domain_error when f_p is not in the native space.
TargetFunction fp_target(const Kernel& kernel, double p,
                         const Eigen::MatrixXd& candidates,
                         const Eigen::MatrixXd& eval_grid);

/// Finite kernel expansion sum_j c_j k(., z_j); native_norm^2 = c^T A c.
TargetFunction expansion_target(const Kernel& kernel,
                                const Eigen::MatrixXd& centers,
                                const Eigen::VectorXd& coeffs,
                                const Eigen::MatrixXd& candidates,
                                const Eigen::MatrixXd& eval_grid);

}  // namespace bgreedy
