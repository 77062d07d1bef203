#include "kkbounds/search.hpp"

#include "kkbounds/certificates.hpp"
#include "kkbounds/errors.hpp"
#include "kkbounds/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace kkbounds {

namespace {

enum class VarKind { nonpositive, free, fixed };

std::vector<VarKind> variable_kinds(const SearchProblem& p) {
  std::vector<VarKind> kinds(static_cast<std::size_t>(p.degree) + 1, VarKind::free);
  kinds[0] = VarKind::fixed;
  for (int i = 1; i <= p.degree; ++i) {
    if (i % 2 == 1 || i > 2 * p.k) kinds[static_cast<std::size_t>(i)] = VarKind::nonpositive;
  }
  for (int i : p.fixed_zero) {
    if (i >= 1 && i <= p.degree) kinds[static_cast<std::size_t>(i)] = VarKind::fixed;
  }
  return kinds;
}

struct GlobalMinimum {
  double value = 0.0;
  double at = 0.0;
};

// Candidates are the endpoints and every real critical point in (-1, 1).
GlobalMinimum global_minimum(const Polynomial& f) {
  GlobalMinimum best{to_double(f(Rational(-1))), -1.0};
  auto consider = [&](const Rational& t) {
    double v = to_double(f(t));
    if (v < best.value) best = {v, to_double(t)};
  };
  consider(Rational(1));
  Polynomial d = f.derivative();
  if (d.degree() >= 1) {
    Polynomial g = squarefree_part(d);
    const Rational width = Rational(1) / (Integer(1) << 48);
    for (auto root : isolate_roots(g, Rational(-1), Rational(1))) {
      refine_root(g, root, width);
      consider((root.lo + root.hi) / 2);
    }
  }
  return best;
}

std::vector<Rational> exact_coeffs(const std::vector<double>& coeffs, const std::vector<VarKind>& kinds) {
  std::vector<Rational> out(coeffs.size());
  out[0] = 1;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    double c = coeffs[i];
    if (kinds[i] == VarKind::nonpositive) c = std::min(c, 0.0);
    if (kinds[i] == VarKind::fixed) c = 0.0;
    out[i] = from_double(c);
  }
  return out;
}

}  // namespace

std::vector<double> chebyshev_extrema(int count) {
  if (count < 2) throw DomainError("need at least two Chebyshev points");
  std::vector<double> pts(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) pts[static_cast<std::size_t>(j)] = -std::cos(std::numbers::pi * j / (count - 1));
  pts.front() = -1.0;
  pts.back() = 1.0;
  return pts;
}

FiniteLpSolution solve_finite_lp(const SearchProblem& p) {
  if (p.degree < 0) throw DomainError("degree must be >= 0");
  if (p.k < 1) throw DomainError("k must be >= 1");
  const auto kinds = variable_kinds(p);

  // Column layout: nonpositive f_i = -g_i (one column), free f_i = u_i - v_i (two).
  std::vector<int> column(kinds.size(), -1);
  int cols = 0;
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    if (kinds[i] == VarKind::fixed) continue;
    column[i] = cols;
    cols += kinds[i] == VarKind::free ? 2 : 1;
  }

  FiniteLpSolution out;
  out.coeffs.assign(kinds.size(), 0.0);
  out.coeffs[0] = 1.0;
  if (cols == 0) {
    out.value = 1.0;
    return out;
  }
  if (p.cuts.empty()) throw DomainError("finite LP needs at least one cut point");

  LinearProgram lp;
  const auto rows = static_cast<Eigen::Index>(p.cuts.size());
  lp.a = Eigen::MatrixXd::Zero(rows, cols);
  lp.b = Eigen::VectorXd::Ones(rows);
  lp.c = Eigen::VectorXd::Zero(cols);
  // f(t) >= 0  <=>  -sum_i f_i P_i(t) <= 1.
  for (Eigen::Index r = 0; r < rows; ++r) {
    auto values = gegenbauer_values(p.n, p.degree, p.cuts[static_cast<std::size_t>(r)]);
    for (std::size_t i = 1; i < kinds.size(); ++i) {
      if (column[i] < 0) continue;
      if (kinds[i] == VarKind::nonpositive) {
        lp.a(r, column[i]) = values[i];
      } else {
        lp.a(r, column[i]) = -values[i];
        lp.a(r, column[i] + 1) = values[i];
      }
    }
  }
  // f(1) = 1 + sum_i f_i.
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    if (column[i] < 0) continue;
    if (kinds[i] == VarKind::nonpositive) {
      lp.c(column[i]) = -1.0;
    } else {
      lp.c(column[i]) = 1.0;
      lp.c(column[i] + 1) = -1.0;
    }
  }

  LpSolution sol = solve_simplex(lp);
  out.status = sol.status;
  out.pivots = sol.pivots;
  if (sol.status != LpStatus::optimal) return out;
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    if (column[i] < 0) continue;
    out.coeffs[i] = kinds[i] == VarKind::nonpositive ? -sol.x(column[i]) : sol.x(column[i]) - sol.x(column[i] + 1);
  }
  out.value = 1.0 + sol.objective;
  return out;
}

SearchOutcome search(int n, int k, int degree, const SearchOptions& options) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  if (degree < 0) throw DomainError("degree must be >= 0, got " + std::to_string(degree));
  if (options.max_iterations < 1) throw DomainError("iteration cap must be >= 1");

  SearchProblem problem{n, k, degree, chebyshev_extrema(std::max(2, options.initial_cuts)), {}};
  const auto kinds = variable_kinds(problem);
  const auto basis = gegenbauer_basis(n, degree);
  auto to_poly = [&](const std::vector<Rational>& c) {
    Polynomial f;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) f += basis[i] * c[i];
    }
    return f;
  };

  SearchOutcome out;
  out.n = n;
  out.k = k;
  out.degree = degree;

  FiniteLpSolution lp;
  std::vector<Rational> coeffs;
  for (int round = 0; round < options.max_iterations; ++round) {
    lp = solve_finite_lp(problem);
    ++out.iterations;
    for (int refill = 0; lp.status == LpStatus::unbounded && refill < 8; ++refill) {
      auto extra = chebyshev_extrema(static_cast<int>(problem.cuts.size()) * 2);
      problem.cuts.insert(problem.cuts.end(), extra.begin(), extra.end());
      lp = solve_finite_lp(problem);
      ++out.iterations;
    }
    if (lp.status == LpStatus::unbounded) {
      throw InternalConsistencyError("cutting-plane LP stays unbounded after adding Chebyshev cuts");
    }
    coeffs = exact_coeffs(lp.coeffs, kinds);
    GlobalMinimum minimum = global_minimum(to_poly(coeffs));
    if (minimum.value >= -options.min_tolerance) {
      out.converged = true;
      break;
    }
    problem.cuts.push_back(minimum.at);
  }
  out.lp_value = lp.value;
  out.cut_points = problem.cuts;
  out.best_value = lp.value;

  // Lift f by delta until the exact cone check accepts it; f(1)/f_0 then
  // becomes (f(1) + delta) / (1 + delta).
  const Polynomial f = to_poly(coeffs);
  const double dip = std::max(0.0, -global_minimum(f).value);
  double delta = dip > 0.0 ? 2.0 * dip : 0.0;
  for (int attempt = 0; attempt < 12; ++attempt) {
    std::vector<Rational> lifted = coeffs;
    lifted[0] += from_double(delta);
    GegenbauerExpansion candidate(n, lifted);
    if (check_cone(candidate, Cone::M, k).member()) {
      out.polynomial = candidate;
      out.certified_value = candidate.value_at_one() / candidate.coeff(0);
      out.best_value = to_double(out.certified_value);
      out.certified = true;
      return out;
    }
    delta = delta == 0.0 ? 1e-14 : delta * 10.0;
  }
  out.polynomial = GegenbauerExpansion(n, coeffs);
  return out;
}

}  // namespace kkbounds
