#pragma once

#include <Eigen/Dense>
#include <utility>

// Closed-form ground truth for interpolation of f(x) = x(1-x) with the
// Brownian bridge kernel on (0,1): optimal points and errors, the f-greedy
// bisection sequence and its errors, and the f_p target norms.

namespace bgreedy::bb {

/// Dyadic index n = 2^{l-1} + i, l >= 1, 0 <= i < 2^{l-1}.
struct DyadicIndex {
  int level = 1;  // l
  int offset = 0; // i
};

DyadicIndex dyadic_index(int n);

/// The n equally spaced points i/(n+1), the unique L_inf-optimal set.
Eigen::MatrixXd optimal_points(int n);

/// (L_inf, native) errors of interpolation on optimal_points(n):
/// ((n+1)^{-2}/4, (n+1)^{-1}/sqrt(3)).
std::pair<double, double> optimal_errors(int n);

/// k-th f-greedy point (2i+1)/2^l for k = 2^{l-1}+i; within a level the
/// canonical order is increasing i.
double fgreedy_point(int k);

/// (L_inf, native) errors after n-1 f-greedy points, n = 2^{l-1}+i:
/// (2^{-2l}, sqrt((2^{1-3l}/3)(2^{l+1}-3i))).
std::pair<double, double> fgreedy_errors(int n);

/// Bracket for the measured L_inf/native ratio of an f-greedy run:
/// (sqrt(3)/(4 sqrt(2)) (n+1)^{-1}, sqrt(3) (n+1)^{-1}).
std::pair<double, double> ratio_bounds(int n);

/// inf over all n-point sets of ||P_X||_inf = (1/2)(n+1)^{-1/2}.
double min_power_linf(int n);

}  // namespace bgreedy::bb
