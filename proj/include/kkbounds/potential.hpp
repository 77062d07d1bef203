#pragma once

#include "kkbounds/polynomial.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kkbounds {

/// Potential function h: [-1, 1] -> [0, +inf] used for h-energies.
///
/// Families:
///   riesz(s)     h(t) = (2 - 2t)^{-s/2}, infinite at t = 1
///   gaussian(s)  h(t) = exp(s (t - 1))
///   polynomial   exact rational polynomial
///   tabulated    piecewise-linear through sorted (t, h) samples covering [-1, 1]
class Potential {
 public:
  struct Riesz {
    double s;
  };
  struct Gaussian {
    double sigma;
  };
  struct Tabulated {
    std::vector<std::pair<double, double>> samples;
  };

  static Potential riesz(double s);
  static Potential gaussian(double sigma);
  static Potential polynomial(Polynomial p);
  static Potential tabulated(std::vector<std::pair<double, double>> samples);

  double operator()(double t) const;

  /// Upper bound for |h'| on [a, b]; +inf when h is unbounded there.
  double derivative_bound(double a, double b) const;

  bool is_polynomial() const { return std::holds_alternative<Polynomial>(kind_); }
  /// True for Riesz and Gaussian potentials, which increase in t.
  bool is_increasing() const { return std::holds_alternative<Riesz>(kind_) || std::holds_alternative<Gaussian>(kind_); }
  const Polynomial* as_polynomial() const { return std::get_if<Polynomial>(&kind_); }

  /// Short textual id, e.g. "riesz:1" or "poly".
  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

 private:
  using Kind = std::variant<Riesz, Gaussian, Polynomial, Tabulated>;
  Potential(Kind kind, std::string id) : kind_(std::move(kind)), id_(std::move(id)) {}

  Kind kind_;
  std::string id_;
};

}  // namespace kkbounds
