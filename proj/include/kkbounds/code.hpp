#pragma once

#include "kkbounds/potential.hpp"

#include <Eigen/Dense>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace kkbounds {

/// Finite set of unit vectors in R^n. Immutable; the Gram matrix is computed
/// once at construction and shared by every moment and energy query.
class SphericalCode {
 public:
  enum class Normalize { no, yes };

  static constexpr double kNormTolerance = 1e-12;

  /// Throws DomainError on an empty code, a dimension mismatch, a zero vector,
  /// or (without normalization) a point whose norm differs from 1 by more
  /// than kNormTolerance.
  SphericalCode(int dimension, const std::vector<std::vector<double>>& points, Normalize normalize = Normalize::no);
  SphericalCode(int dimension, Eigen::MatrixXd points, Normalize normalize = Normalize::no);

  int dimension() const { return dimension_; }
  std::size_t size() const { return static_cast<std::size_t>(points_.rows()); }

  /// One point per row.
  const Eigen::MatrixXd& points() const { return points_; }
  const Eigen::MatrixXd& gram() const { return gram_; }

  std::vector<std::vector<double>> point_list() const;

 private:
  int dimension_;
  Eigen::MatrixXd points_;
  Eigen::MatrixXd gram_;
};

struct DesignReport {
  struct Verdict {
    std::string property;
    double tolerance = 0.0;
    bool holds = false;
  };

  std::map<int, double> moments;
  std::vector<Verdict> verdicts;
  // max |M_i| over the tested indices, compared against tolerance * |C|^2.
  double max_residual = 0.0;
  double threshold = 0.0;

  bool holds() const;
};

/// M_i(C) = sum over ordered pairs of P_i^{(n)}(<x, y>), diagonal included.
double moment(const SphericalCode& code, int i);

/// M_1 .. M_max in one pass over the Gram matrix; index 0 holds |C|^2.
std::vector<double> moments(const SphericalCode& code, int max_index);

/// Verdict is true iff max_{i in T} |M_i| <= tol * |C|^2.
DesignReport is_design(const SphericalCode& code, const std::set<int>& indices, double tol);

/// T = {2, 4, ..., 2k}.
DesignReport is_kk_design(const SphericalCode& code, int k, double tol);

/// sum over x in C of P_i^{(n)}(<x, y>) with y the point at y_index.
double per_point_moment(const SphericalCode& code, int i, std::size_t y_index);

/// Sum of h over ordered pairs of distinct points.
double energy(const SphericalCode& code, const Potential& h);

/// Keeps the first point of each antipodal pair (in index order).
SphericalCode antipodal_halve(const SphericalCode& code);

/// C followed by -C.
SphericalCode antipodal_double(const SphericalCode& code);

enum class Construction { orthonormal_basis, cross_polytope, icosahedron, icosahedron_half, regular_polygon };

Construction construction_from_name(const std::string& name);
std::string construction_name(Construction c);

/// Built-in configurations. `points` is only used by regular_polygon, which
/// requires n == 2 and places that many points on the unit circle.
SphericalCode construct(Construction name, int n, int points = 0);

/// [1 + sum_{x != y} <x,y>^4] - 3|C| / (n(n+2)) for the point y. Vanishes for
/// (2,2)-designs with n >= 3; throws DomainError for n < 3.
double fourth_moment_residual(const SphericalCode& code, std::size_t y_index);

}  // namespace kkbounds
