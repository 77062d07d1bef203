#pragma once

#include <Eigen/Dense>

namespace kkbounds {

/// maximize c^T x  subject to  A x <= b, x >= 0, with b >= 0 so that the
/// origin is a feasible starting vertex.
struct LinearProgram {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;
};

enum class LpStatus { optimal, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Eigen::VectorXd x;
  double objective = 0.0;
  int pivots = 0;
};

/// Dense tableau simplex with Bland's smallest-index rule, so it cannot cycle.
/// Throws DomainError on inconsistent shapes or a negative entry in b.
LpSolution solve_simplex(const LinearProgram& lp);

}  // namespace kkbounds
