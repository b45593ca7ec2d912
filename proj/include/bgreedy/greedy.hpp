#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bgreedy/interpolate.hpp"

namespace bgreedy {

inline constexpr double kBetaInf = std::numeric_limits<double>::infinity();

enum class WeakPolicy {
  Maximizer,           // argmax of eta, ties broken by lowest index
  FirstAboveThreshold, // lowest index with eta >= gamma_n * max eta
};

struct GammaSchedule {
  enum class Kind { Constant, PowerDecay } kind = Kind::Constant;
  double gamma = 1.0;  // constant value, in (0,1]
  double c = 1.0;      // power decay: gamma_n = min(1, c * n^{-p})
  double p = 0.0;

  static GammaSchedule constant(double gamma);
  static GammaSchedule power_decay(double c, double p);
  double at(int n) const;  // n = number of points already selected
};

struct GreedyConfig {
  double beta = 1.0;  // in [0, inf], kBetaInf for the f/P rule
  GammaSchedule gamma_schedule;
  WeakPolicy weak_policy = WeakPolicy::Maximizer;
  int max_points = 100;
  double power_tol = 1e-13;  // on squared power values
};

/// Per-iteration snapshot. n is the 1-based count of selected points.
struct ErrorRecord {
  int n = 0;
  Eigen::VectorXd point;
  double eta_value = 0.0;      // criterion at the selected point
  double eta_max = 0.0;        // max criterion over admissible candidates
  double gamma = 1.0;          // threshold factor used at this step
  double residual_at_selected = 0.0;  // |r_{n-1}(x_n)|
  double power_at_selected = 0.0;     // P_{X_{n-1}}(x_n)
  double linf_residual = 0.0;  // max |r_n| over the evaluation grid
  double max_power = 0.0;      // max P_{X_n} over the evaluation grid
  double cand_linf = 0.0;      // max |r_n| over the candidate grid
  double cand_max_power = 0.0; // max P_{X_n} over the candidate grid
  std::optional<double> native_residual;  // ||r_n||_{H_k} when known
  double interp_norm = 0.0;
  std::string stop_reason;  // nonempty on the final record
};

/// eta_beta = |r|^beta P^{1-beta} elementwise. For beta = inf the ratio
/// |r|/P, with zero-power entries mapped to -inf so they are never chosen.
Eigen::VectorXd criterion(double beta, const Eigen::VectorXd& residual,
                          const Eigen::VectorXd& power2,
                          double power_tol = 1e-13);

/// One weak beta-greedy selection among unselected candidates with
/// power2 > power_tol. Returns the candidate index; eta_out/eta_max_out
/// report the criterion at the chosen point and its max. Throws
/// std::runtime_error when no admissible candidate remains.
int select(const GreedyState& state, const GreedyConfig& config, int n,
           double* eta_out = nullptr, double* eta_max_out = nullptr);

struct RunResult {
  std::vector<ErrorRecord> records;
  GreedyState state;
};

/// Full greedy loop: select, add, record, until max_points, candidate
/// exhaustion, or power breakdown. The final record carries the stop reason.
RunResult run(const Kernel& kernel, const Eigen::MatrixXd& candidates,
              const Eigen::MatrixXd& eval_grid, const TargetFunction& target,
              const GreedyConfig& config);

}  // namespace bgreedy
