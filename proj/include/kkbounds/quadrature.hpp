#pragma once

#include "kkbounds/polynomial.hpp"
#include "kkbounds/rational.hpp"
#include "kkbounds/roots.hpp"

#include <functional>
#include <string>
#include <vector>

namespace kkbounds {

struct QuadratureNode {
  RootInterval bracket;
  double value = 0.0;
};

/// The k zeros of P_k^{(n+2)} in (-1, 1), increasing, each bracketed by an
/// exact rational interval of width <= 1e-14.
std::vector<QuadratureNode> gegenbauer_zeros(int n, int k);

/// f_0 = (f(1) + f(-1)) / D(n, 2k+1) + sum_i rho_i f(t_i), exact for deg f <= 2k,
/// with interior nodes t_i the zeros of P_k^{(n+2)}.
struct QuadratureRule {
  int n = 3;
  int k = 1;
  Rational endpoint_weight;
  std::vector<QuadratureNode> nodes;
  std::vector<double> weights;

  double apply(const std::function<double(double)>& f) const;
  double apply(const Polynomial& f) const;
};

/// Interior weights solve the exactness equations on P_1, ..., P_2k (all with
/// f_0 = 0), a consistent 2k x k system; the rule is then checked against the
/// exact f_0 of every monomial up to degree 2k. Throws SingularSystemError if
/// the system has rank below k.
QuadratureRule levenshtein_rule(int n, int k);

/// Q_j^{(n)}(k): the rule applied to P_j^{(n)}.
double test_function(const QuadratureRule& rule, int j);
double test_function(int n, int k, int j);

constexpr double kNegativeTestThreshold = 1e-9;

struct TestFunctionEntry {
  enum class Classification { proved_zero, computed };
  enum class Sign { zero, positive, negative, inconclusive };

  int j = 0;
  double value = 0.0;
  Classification classification = Classification::computed;
  Sign sign = Sign::zero;
};

std::string classification_name(TestFunctionEntry::Classification c);
std::string sign_name(TestFunctionEntry::Sign s);

struct TestFunctionTable {
  int n = 3;
  int k = 1;
  std::vector<TestFunctionEntry> entries;

  /// Degrees j with Q_j < -kNegativeTestThreshold.
  std::vector<int> improvement_degrees() const;
  std::vector<int> inconclusive_degrees() const;
};

inline int default_jmax(int k) { return 4 * k + 4; }

/// Q_1 .. Q_jmax. Indices j <= 2k and odd j are classified proved_zero; the
/// rest are computed and signed with the -1e-9 threshold.
TestFunctionTable optimality_scan(int n, int k, int jmax);

}  // namespace kkbounds
