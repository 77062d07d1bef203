#pragma once

#include "kkbounds/gegenbauer.hpp"
#include "kkbounds/rational.hpp"
#include "kkbounds/simplex.hpp"

#include <vector>

namespace kkbounds {

/// Maximize f(1) over f = 1 + sum_{i=1}^{degree} f_i P_i^{(n)} with f_i <= 0
/// for odd i and for even i > 2k, and f(t) >= 0 at every cut point.
struct SearchProblem {
  int n = 3;
  int k = 1;
  int degree = 0;
  std::vector<double> cuts;
  // Coefficients pinned to zero in addition to the sign constraints.
  std::vector<int> fixed_zero;
};

struct FiniteLpSolution {
  LpStatus status = LpStatus::optimal;
  // f_0 .. f_degree with f_0 = 1.
  std::vector<double> coeffs;
  double value = 0.0;
  int pivots = 0;
};

FiniteLpSolution solve_finite_lp(const SearchProblem& problem);

/// cos(pi j / (count - 1)), j = 0 .. count-1, ascending; includes +-1.
std::vector<double> chebyshev_extrema(int count);

struct SearchOptions {
  int max_iterations = 200;
  int initial_cuts = 64;
  double min_tolerance = 1e-12;
};

struct SearchOutcome {
  int n = 3;
  int k = 1;
  int degree = 0;
  // Certified f(1)/f_0 when `certified`, otherwise the last LP value.
  double best_value = 0.0;
  double lp_value = 0.0;
  Rational certified_value;
  GegenbauerExpansion polynomial{2, {}};
  bool certified = false;
  bool converged = false;
  int iterations = 0;
  std::vector<double> cut_points;
};

/// Cutting-plane loop: solve the finite LP, find the global minimum of the
/// LP polynomial on [-1, 1] by exact root isolation of its derivative, add the
/// minimizer as a new cut while the minimum is below -min_tolerance. The final
/// polynomial is lifted by the smallest tried constant that makes it provably
/// nonnegative and re-checked exactly against the M_{n,k} cone.
SearchOutcome search(int n, int k, int degree, const SearchOptions& options = {});

}  // namespace kkbounds
