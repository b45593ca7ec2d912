#include "bgreedy/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bgreedy/grid.hpp"

namespace bgreedy {

bool GreedyState::is_selected(int idx) const {
  return std::find(selected.begin(), selected.end(), idx) != selected.end();
}

GreedyState init_state(const Kernel& kernel, const Eigen::MatrixXd& candidates,
                       const Eigen::MatrixXd& eval_grid, const TargetFunction& target) {
  if (target.values.size() != candidates.rows())
    throw std::invalid_argument("target values misaligned with candidate grid");
  if (target.eval_values.size() != eval_grid.rows())
    throw std::invalid_argument("target values misaligned with evaluation grid");
  if (!pairwise_distinct(candidates))
    throw std::invalid_argument("candidate points are not pairwise distinct");
  GreedyState s;
  s.kernel = &kernel;
  s.candidates = &candidates;
  s.eval_grid = &eval_grid;
  s.power2 = eval_diag(kernel, candidates);
  s.power2_eval = eval_diag(kernel, eval_grid);
  s.residual = target.values;
  s.residual_eval = target.eval_values;
  s.interp_norm2 = 0.0;
  return s;
}

namespace {

// Clamp small negative squared power values produced by the subtraction of
// squares; anything below the clamp window is a genuine breakdown.
void clamp_power(Eigen::VectorXd& power2) {
  for (int i = 0; i < power2.size(); ++i)
    if (power2[i] < 0.0 && power2[i] >= -kPowerClamp) power2[i] = 0.0;
}

}  // namespace

void add_point(GreedyState& state, int idx, double power_tol) {
  if (idx < 0 || idx >= state.candidates->rows())
    throw std::logic_error("candidate index out of range");
  if (state.is_selected(idx))
    throw std::logic_error("candidate already selected");
  const double p2 = state.power2[idx];
  if (p2 <= power_tol) {
    std::ostringstream msg;
    msg << "power function breakdown at candidate " << idx << ": P^2 = " << p2;
    throw std::runtime_error(msg.str());
  }
  const double p = std::sqrt(p2);
  const Eigen::VectorXd x = state.candidates->row(idx).transpose();

  Eigen::VectorXd col = eval_column(*state.kernel, *state.candidates, x);
  Eigen::VectorXd col_eval = eval_column(*state.kernel, *state.eval_grid, x);
  for (size_t j = 0; j < state.newton.size(); ++j) {
    const double nj_at_x = state.newton[j][idx];
    col.noalias() -= nj_at_x * state.newton[j];
    col_eval.noalias() -= nj_at_x * state.newton_eval[j];
  }
  col /= p;
  col_eval /= p;

  const double c = state.residual[idx] / p;
  state.residual.noalias() -= c * col;
  state.residual_eval.noalias() -= c * col_eval;
  state.power2.array() -= col.array().square();
  state.power2_eval.array() -= col_eval.array().square();
  clamp_power(state.power2);
  clamp_power(state.power2_eval);
  state.power2[idx] = 0.0;
  state.residual[idx] = 0.0;

  state.newton.push_back(std::move(col));
  state.newton_eval.push_back(std::move(col_eval));
  state.coeffs.push_back(c);
  state.interp_norm2 += c * c;
  state.selected.push_back(idx);
}

double interpolant_norm(const GreedyState& state) {
  return std::sqrt(state.interp_norm2);
}

std::optional<double> residual_native_norm(const GreedyState& state,
                                           const TargetFunction& target) {
  if (!target.native_norm) return std::nullopt;
  const double n2 = *target.native_norm * *target.native_norm;
  return std::sqrt(std::max(0.0, n2 - state.interp_norm2));
}

std::pair<double, double> sup_errors(const GreedyState& state) {
  const double linf = state.residual_eval.size() > 0
                          ? state.residual_eval.cwiseAbs().maxCoeff()
                          : 0.0;
  const double pmax = state.power2_eval.size() > 0
                          ? std::sqrt(std::max(0.0, state.power2_eval.maxCoeff()))
                          : 0.0;
  return {linf, pmax};
}

}  // namespace bgreedy
