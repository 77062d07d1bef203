#include "kkbounds/code.hpp"

#include "kkbounds/errors.hpp"
#include "kkbounds/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace kkbounds {

namespace {

constexpr double kAntipodalTolerance = 1e-9;
// Off-diagonal inner products this close to 1 are treated as coincident points.
constexpr double kCoincidentGap = 1e-12;

Eigen::MatrixXd to_matrix(int dimension, const std::vector<std::vector<double>>& points) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(points.size()), dimension);
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (static_cast<int>(points[r].size()) != dimension) {
      throw DomainError("point " + std::to_string(r) + " has " + std::to_string(points[r].size()) +
                        " coordinates, expected " + std::to_string(dimension));
    }
    for (int c = 0; c < dimension; ++c) m(static_cast<Eigen::Index>(r), c) = points[r][static_cast<std::size_t>(c)];
  }
  return m;
}

}  // namespace

SphericalCode::SphericalCode(int dimension, const std::vector<std::vector<double>>& points, Normalize normalize)
    : SphericalCode(dimension, to_matrix(dimension, points), normalize) {}

SphericalCode::SphericalCode(int dimension, Eigen::MatrixXd points, Normalize normalize)
    : dimension_(dimension), points_(std::move(points)) {
  if (dimension < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(dimension));
  if (points_.rows() == 0) throw DomainError("a spherical code needs at least one point");
  if (points_.cols() != dimension) throw DomainError("point matrix width does not match dimension");
  for (Eigen::Index r = 0; r < points_.rows(); ++r) {
    double norm = points_.row(r).norm();
    if (!std::isfinite(norm) || norm == 0.0) {
      throw DomainError("point " + std::to_string(r) + " is zero or not finite");
    }
    if (normalize == Normalize::yes) {
      points_.row(r) /= norm;
    } else if (std::abs(norm - 1.0) > kNormTolerance) {
      throw DomainError("point " + std::to_string(r) + " is not a unit vector (norm " + std::to_string(norm) + ")");
    }
  }
  gram_ = points_ * points_.transpose();
}

std::vector<std::vector<double>> SphericalCode::point_list() const {
  std::vector<std::vector<double>> out(size(), std::vector<double>(static_cast<std::size_t>(dimension_)));
  for (std::size_t r = 0; r < size(); ++r) {
    for (int c = 0; c < dimension_; ++c) out[r][static_cast<std::size_t>(c)] = points_(static_cast<Eigen::Index>(r), c);
  }
  return out;
}

bool DesignReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.holds; });
}

std::vector<double> moments(const SphericalCode& code, int max_index) {
  if (max_index < 1) throw DomainError("moment index must be >= 1");
  const auto size = static_cast<Eigen::Index>(code.size());
  std::vector<double> sums(static_cast<std::size_t>(max_index) + 1, static_cast<double>(code.size()));
  // Upper triangle only; the Gram matrix is symmetric.
  for (Eigen::Index x = 0; x < size; ++x) {
    for (Eigen::Index y = x + 1; y < size; ++y) {
      auto values = gegenbauer_values(code.dimension(), max_index, code.gram()(x, y));
      for (std::size_t i = 0; i < values.size(); ++i) sums[i] += 2.0 * values[i];
    }
  }
  sums[0] = static_cast<double>(code.size()) * static_cast<double>(code.size());
  return sums;
}

double moment(const SphericalCode& code, int i) {
  if (i < 1) throw DomainError("moment index must be >= 1, got " + std::to_string(i));
  return moments(code, i)[static_cast<std::size_t>(i)];
}

DesignReport is_design(const SphericalCode& code, const std::set<int>& indices, double tol) {
  if (indices.empty()) throw DomainError("design index set must be nonempty");
  if (*indices.begin() < 1) throw DomainError("design indices must be >= 1");
  const double n = static_cast<double>(code.size());
  auto all = moments(code, *indices.rbegin());

  DesignReport report;
  report.threshold = tol * n * n;
  std::string property = "T={";
  for (int i : indices) {
    double m = all[static_cast<std::size_t>(i)];
    report.moments[i] = m;
    report.max_residual = std::max(report.max_residual, std::abs(m));
    if (property.size() > 3) property += ',';
    property += std::to_string(i);
  }
  property += '}';
  report.verdicts.push_back({property, tol, report.max_residual <= report.threshold});
  return report;
}

DesignReport is_kk_design(const SphericalCode& code, int k, double tol) {
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  std::set<int> indices;
  for (int i = 1; i <= k; ++i) indices.insert(2 * i);
  DesignReport report = is_design(code, indices, tol);
  report.verdicts.front().property = "(" + std::to_string(k) + "," + std::to_string(k) + ")-design";
  return report;
}

double per_point_moment(const SphericalCode& code, int i, std::size_t y_index) {
  if (i < 0) throw DomainError("moment index must be >= 0");
  if (y_index >= code.size()) {
    throw IndexError("point index " + std::to_string(y_index) + " out of range for code of size " +
                     std::to_string(code.size()));
  }
  double sum = 0.0;
  const auto y = static_cast<Eigen::Index>(y_index);
  for (Eigen::Index x = 0; x < static_cast<Eigen::Index>(code.size()); ++x) {
    sum += x == y ? 1.0 : gegenbauer_value(code.dimension(), i, code.gram()(x, y));
  }
  return sum;
}

double energy(const SphericalCode& code, const Potential& h) {
  const auto size = static_cast<Eigen::Index>(code.size());
  double total = 0.0;
  for (Eigen::Index x = 0; x < size; ++x) {
    for (Eigen::Index y = 0; y < size; ++y) {
      if (x == y) continue;
      double t = std::clamp(code.gram()(x, y), -1.0, 1.0);
      if (t > 1.0 - kCoincidentGap) t = 1.0;
      double value = h(t);
      if (!std::isfinite(value)) {
        throw InfiniteEnergyError("points " + std::to_string(x) + " and " + std::to_string(y) +
                                  " coincide and the potential is infinite at t = 1");
      }
      total += value;
    }
  }
  return total;
}

SphericalCode antipodal_halve(const SphericalCode& code) {
  const auto size = static_cast<Eigen::Index>(code.size());
  const auto& p = code.points();
  std::vector<bool> used(code.size(), false);
  std::vector<Eigen::Index> kept;
  for (Eigen::Index x = 0; x < size; ++x) {
    if (used[static_cast<std::size_t>(x)]) continue;
    Eigen::Index partner = -1;
    int matches = 0;
    for (Eigen::Index y = 0; y < size; ++y) {
      if (y == x) continue;
      if ((p.row(x) + p.row(y)).norm() <= kAntipodalTolerance) {
        partner = y;
        ++matches;
      }
    }
    if (matches == 0) throw NotAntipodalError("point " + std::to_string(x) + " has no antipode in the code");
    if (matches > 1) throw NotAntipodalError("point " + std::to_string(x) + " has an ambiguous antipode");
    if (used[static_cast<std::size_t>(partner)]) {
      throw NotAntipodalError("antipode of point " + std::to_string(x) + " is already paired");
    }
    used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(partner)] = true;
    kept.push_back(x);
  }
  Eigen::MatrixXd half(static_cast<Eigen::Index>(kept.size()), code.dimension());
  for (std::size_t r = 0; r < kept.size(); ++r) half.row(static_cast<Eigen::Index>(r)) = p.row(kept[r]);
  return SphericalCode(code.dimension(), std::move(half));
}

SphericalCode antipodal_double(const SphericalCode& code) {
  const auto size = static_cast<Eigen::Index>(code.size());
  const auto& p = code.points();
  for (Eigen::Index x = 0; x < size; ++x) {
    for (Eigen::Index y = x + 1; y < size; ++y) {
      if ((p.row(x) + p.row(y)).norm() <= kAntipodalTolerance) {
        throw OverlapError("points " + std::to_string(x) + " and " + std::to_string(y) + " are antipodal");
      }
    }
  }
  Eigen::MatrixXd doubled(2 * size, code.dimension());
  doubled.topRows(size) = p;
  doubled.bottomRows(size) = -p;
  return SphericalCode(code.dimension(), std::move(doubled));
}

Construction construction_from_name(const std::string& name) {
  if (name == "orthonormal_basis") return Construction::orthonormal_basis;
  if (name == "cross_polytope") return Construction::cross_polytope;
  if (name == "icosahedron") return Construction::icosahedron;
  if (name == "icosahedron_half") return Construction::icosahedron_half;
  if (name == "regular_polygon") return Construction::regular_polygon;
  throw UnknownConstructionError("unknown construction '" + name + "'");
}

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::orthonormal_basis: return "orthonormal_basis";
    case Construction::cross_polytope: return "cross_polytope";
    case Construction::icosahedron: return "icosahedron";
    case Construction::icosahedron_half: return "icosahedron_half";
    case Construction::regular_polygon: return "regular_polygon";
  }
  throw UnknownConstructionError("unknown construction");
}

SphericalCode construct(Construction name, int n, int points) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  switch (name) {
    case Construction::orthonormal_basis:
      return SphericalCode(n, Eigen::MatrixXd::Identity(n, n));
    case Construction::cross_polytope: {
      Eigen::MatrixXd m(2 * n, n);
      m.topRows(n) = Eigen::MatrixXd::Identity(n, n);
      m.bottomRows(n) = -Eigen::MatrixXd::Identity(n, n);
      return SphericalCode(n, std::move(m));
    }
    case Construction::icosahedron:
    case Construction::icosahedron_half: {
      if (n != 3) throw DomainError(construction_name(name) + " exists only for n = 3");
      const double phi = std::numbers::phi;
      // One vertex from each antipodal pair of (0, +-1, +-phi) and cyclic shifts.
      std::vector<std::vector<double>> half{
          {0, 1, phi}, {0, 1, -phi}, {1, phi, 0}, {1, -phi, 0}, {phi, 0, 1}, {-phi, 0, 1},
      };
      std::vector<std::vector<double>> pts = half;
      if (name == Construction::icosahedron) {
        for (const auto& v : half) pts.push_back({-v[0], -v[1], -v[2]});
      }
      return SphericalCode(3, pts, SphericalCode::Normalize::yes);
    }
    case Construction::regular_polygon: {
      if (n != 2) throw DomainError("regular_polygon lives on the unit circle (n = 2)");
      if (points < 1) throw DomainError("regular_polygon needs at least one point");
      Eigen::MatrixXd m(points, 2);
      for (int j = 0; j < points; ++j) {
        double angle = 2.0 * std::numbers::pi * j / points;
        m(j, 0) = std::cos(angle);
        m(j, 1) = std::sin(angle);
      }
      return SphericalCode(2, std::move(m), SphericalCode::Normalize::yes);
    }
  }
  throw UnknownConstructionError("unknown construction");
}

double fourth_moment_residual(const SphericalCode& code, std::size_t y_index) {
  const int n = code.dimension();
  if (n < 3) throw DomainError("the fourth-moment identity is stated for n >= 3");
  if (y_index >= code.size()) throw IndexError("point index " + std::to_string(y_index) + " out of range");
  const auto y = static_cast<Eigen::Index>(y_index);
  double lhs = 1.0;
  for (Eigen::Index x = 0; x < static_cast<Eigen::Index>(code.size()); ++x) {
    if (x == y) continue;
    double t = code.gram()(x, y);
    lhs += t * t * t * t;
  }
  return lhs - 3.0 * static_cast<double>(code.size()) / (n * (n + 2.0));
}

}  // namespace kkbounds
