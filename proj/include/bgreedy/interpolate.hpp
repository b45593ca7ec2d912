#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "bgreedy/kernel.hpp"
#include "bgreedy/target.hpp"

namespace bgreedy {

// Squared power values in [-kPowerClamp, 0) are clamped to zero; values
// below -kPowerClamp indicate loss of positivity and raise an error.
inline constexpr double kPowerClamp = 1e-12;

/// Incremental interpolation state over a fixed candidate grid and a
/// separate evaluation grid. The Newton basis, squared power function,
/// residual and expansion coefficients are all updated in O(grid * n)
/// per added point; no Gram system is ever re-solved.
struct GreedyState {
  const Kernel* kernel = nullptr;
  const Eigen::MatrixXd* candidates = nullptr;
  const Eigen::MatrixXd* eval_grid = nullptr;

  std::vector<int> selected;                 // candidate indices, in order
  std::vector<Eigen::VectorXd> newton;       // N_j over the candidate grid
  std::vector<Eigen::VectorXd> newton_eval;  // N_j over the evaluation grid
  Eigen::VectorXd power2;       // P^2 over the candidate grid
  Eigen::VectorXd power2_eval;  // P^2 over the evaluation grid
  Eigen::VectorXd residual;       // f - I_X f over the candidate grid
  Eigen::VectorXd residual_eval;  // same over the evaluation grid
  std::vector<double> coeffs;   // c_i = r_{i-1}(x_i) / P_{X_{i-1}}(x_i)
  double interp_norm2 = 0.0;    // sum of c_i^2

  int size() const { return static_cast<int>(selected.size()); }
  bool is_selected(int idx) const;
};

/// Empty selection: P^2 = k(x,x), residual = f.
GreedyState init_state(const Kernel& kernel, const Eigen::MatrixXd& candidates,
                       const Eigen::MatrixXd& eval_grid, const TargetFunction& target);

/// Adds candidate idx to the selection and updates all vectors on both
/// grids. Throws std::logic_error if idx is already selected and
/// std::runtime_error on power-function breakdown at idx.
void add_point(GreedyState& state, int idx, double power_tol = 1e-13);

/// ||I_{X_n} f||_{H_k} via the Newton expansion identity.
double interpolant_norm(const GreedyState& state);

/// ||f - I_{X_n} f||_{H_k} by orthogonality, when ||f|| is known.
std::optional<double> residual_native_norm(const GreedyState& state,
                                           const TargetFunction& target);

/// (max |residual|, max P) over the evaluation grid.
std::pair<double, double> sup_errors(const GreedyState& state);

}  // namespace bgreedy
