#include "bgreedy/greedy.hpp"

#include <cmath>
#include <stdexcept>

namespace bgreedy {

GammaSchedule GammaSchedule::constant(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::invalid_argument("constant gamma must be in (0,1]");
  GammaSchedule s;
  s.kind = Kind::Constant;
  s.gamma = gamma;
  return s;
}

GammaSchedule GammaSchedule::power_decay(double c, double p) {
  if (c <= 0.0 || p < 0.0)
    throw std::invalid_argument("power decay needs c > 0 and p >= 0");
  GammaSchedule s;
  s.kind = Kind::PowerDecay;
  s.c = c;
  s.p = p;
  return s;
}

double GammaSchedule::at(int n) const {
  if (kind == Kind::Constant) return gamma;
  const double m = std::max(n, 1);
  return std::min(1.0, c * std::pow(m, -p));
}

Eigen::VectorXd criterion(double beta, const Eigen::VectorXd& residual,
                          const Eigen::VectorXd& power2, double power_tol) {
  if (residual.size() != power2.size())
    throw std::invalid_argument("residual and power vectors are misaligned");
  if (!(beta >= 0.0)) throw std::invalid_argument("beta must be nonnegative");
  const int n = static_cast<int>(residual.size());
  Eigen::VectorXd eta(n);
  const double neg_inf = -std::numeric_limits<double>::infinity();
  if (beta == 0.0) {
    // P-greedy: target-independent
    for (int i = 0; i < n; ++i) eta[i] = std::sqrt(std::max(0.0, power2[i]));
  } else if (beta == kBetaInf) {
    for (int i = 0; i < n; ++i) {
      eta[i] = power2[i] > power_tol
                   ? std::abs(residual[i]) / std::sqrt(power2[i])
                   : neg_inf;
    }
  } else if (beta == 1.0) {
    eta = residual.cwiseAbs();
  } else {
    for (int i = 0; i < n; ++i) {
      const double r = std::abs(residual[i]);
      const double p = std::sqrt(std::max(0.0, power2[i]));
      if (beta > 1.0 && p <= 0.0) {
        eta[i] = neg_inf;  // 0/0 at selected points
        continue;
      }
      eta[i] = std::pow(r, beta) * std::pow(p, 1.0 - beta);
    }
  }
  return eta;
}

int select(const GreedyState& state, const GreedyConfig& config, int n,
           double* eta_out, double* eta_max_out) {
  const Eigen::VectorXd eta =
      criterion(config.beta, state.residual, state.power2, config.power_tol);
  const int count = static_cast<int>(eta.size());
  double eta_max = -std::numeric_limits<double>::infinity();
  int argmax = -1;
  for (int i = 0; i < count; ++i) {
    if (state.power2[i] <= config.power_tol) continue;  // selected or broken down
    if (eta[i] > eta_max) {
      eta_max = eta[i];
      argmax = i;
    }
  }
  if (argmax < 0) throw std::runtime_error("no admissible candidate left");

  const double gamma_n = config.gamma_schedule.at(n);
  int chosen = argmax;
  if (config.weak_policy == WeakPolicy::FirstAboveThreshold) {
    const double threshold = gamma_n * eta_max;
    for (int i = 0; i < count; ++i) {
      if (state.power2[i] <= config.power_tol) continue;
      if (eta[i] >= threshold) {
        chosen = i;
        break;
      }
    }
  }
  if (eta_out) *eta_out = eta[chosen];
  if (eta_max_out) *eta_max_out = eta_max;
  return chosen;
}

RunResult run(const Kernel& kernel, const Eigen::MatrixXd& candidates,
              const Eigen::MatrixXd& eval_grid, const TargetFunction& target,
              const GreedyConfig& config) {
  if (candidates.rows() == 0 || eval_grid.rows() == 0)
    throw std::invalid_argument("empty grid");
  RunResult result;
  result.state = init_state(kernel, candidates, eval_grid, target);
  GreedyState& state = result.state;

  std::string stop_reason;
  while (state.size() < config.max_points) {
    const double max_power2 =
        state.power2.size() > 0 ? state.power2.maxCoeff() : 0.0;
    if (max_power2 < config.power_tol) {
      stop_reason = "power_breakdown";
      break;
    }
    int idx;
    double eta_value = 0.0, eta_max = 0.0;
    try {
      idx = select(state, config, state.size(), &eta_value, &eta_max);
    } catch (const std::runtime_error&) {
      stop_reason = "exhausted";
      break;
    }

    ErrorRecord rec;
    rec.n = state.size() + 1;
    rec.point = candidates.row(idx).transpose();
    rec.eta_value = eta_value;
    rec.eta_max = eta_max;
    rec.gamma = config.gamma_schedule.at(state.size());
    rec.residual_at_selected = std::abs(state.residual[idx]);
    rec.power_at_selected = std::sqrt(std::max(0.0, state.power2[idx]));

    add_point(state, idx, config.power_tol);

    std::tie(rec.linf_residual, rec.max_power) = sup_errors(state);
    rec.cand_linf = state.residual.cwiseAbs().maxCoeff();
    rec.cand_max_power = std::sqrt(std::max(0.0, state.power2.maxCoeff()));
    rec.native_residual = residual_native_norm(state, target);
    rec.interp_norm = interpolant_norm(state);
    result.records.push_back(std::move(rec));
  }
  if (stop_reason.empty()) {
    stop_reason = state.size() >= config.max_points ? "max_points" : "exhausted";
  }
  if (!result.records.empty()) result.records.back().stop_reason = stop_reason;
  return result;
}

}  // namespace bgreedy
