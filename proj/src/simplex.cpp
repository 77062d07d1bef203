#include "kkbounds/simplex.hpp"

#include "kkbounds/errors.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace kkbounds {

namespace {

constexpr double kPivotEps = 1e-12;

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp) {
  const Eigen::Index m = lp.a.rows();
  const Eigen::Index n = lp.a.cols();
  if (lp.b.size() != m || lp.c.size() != n) throw DomainError("linear program shapes are inconsistent");
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lp.b(i) < 0) throw DomainError("right-hand side must be nonnegative");
  }

  // Columns: n structural, m slack, 1 rhs. Last row holds reduced costs
  // (negated objective), so an entering column has a negative entry there.
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m + 1, n + m + 1);
  t.topLeftCorner(m, n) = lp.a;
  t.block(0, n, m, m) = Eigen::MatrixXd::Identity(m, m);
  t.col(n + m).head(m) = lp.b;
  t.row(m).head(n) = -lp.c.transpose();

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(m));
  for (Eigen::Index i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  LpSolution sol;
  const Eigen::Index rhs = n + m;
  while (true) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < n + m; ++j) {
      if (t(m, j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    Eigen::Index leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (t(i, enter) <= kPivotEps) continue;
      const double ratio = t(i, rhs) / t(i, enter);
      const bool better = leave < 0 || ratio < best - kPivotEps;
      const bool tie_break = leave >= 0 && ratio <= best + kPivotEps &&
                             basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)];
      if (better || tie_break) {
        best = better ? ratio : std::min(best, ratio);
        leave = i;
      }
    }
    if (leave < 0) {
      sol.status = LpStatus::unbounded;
      return sol;
    }

    t.row(leave) /= t(leave, enter);
    for (Eigen::Index i = 0; i <= m; ++i) {
      if (i == leave) continue;
      double factor = t(i, enter);
      if (factor != 0.0) t.row(i) -= factor * t.row(leave);
    }
    basis[static_cast<std::size_t>(leave)] = enter;
    ++sol.pivots;
  }

  sol.x = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    Eigen::Index var = basis[static_cast<std::size_t>(i)];
    if (var < n) sol.x(var) = t(i, rhs);
  }
  sol.objective = lp.c.dot(sol.x);
  return sol;
}

}  // namespace kkbounds
