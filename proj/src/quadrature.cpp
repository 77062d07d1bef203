#include "kkbounds/quadrature.hpp"

#include "kkbounds/errors.hpp"
#include "kkbounds/gegenbauer.hpp"
#include "kkbounds/universal.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace kkbounds {

std::vector<QuadratureNode> gegenbauer_zeros(int n, int k) {
  if (n < 2) throw DomainError("dimension must be >= 2, got " + std::to_string(n));
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  const Polynomial p = gegenbauer(n + 2, k);
  // Refining well past 1e-14 makes the midpoint the correctly rounded double.
  const Rational width = Rational(1) / (Integer(1) << 62);
  std::vector<QuadratureNode> nodes;
  for (auto root : isolate_roots(p, Rational(-1), Rational(1))) {
    refine_root(p, root, width);
    nodes.push_back({root, root.approx()});
  }
  if (static_cast<int>(nodes.size()) != k) {
    throw InternalConsistencyError("P_k^{(n+2)} does not have k simple zeros in [-1, 1]");
  }
  return nodes;
}

double QuadratureRule::apply(const std::function<double(double)>& f) const {
  double sum = to_double(endpoint_weight) * (f(1.0) + f(-1.0));
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i].value);
  return sum;
}

double QuadratureRule::apply(const Polynomial& f) const {
  return apply([&f](double t) { return f(t); });
}

QuadratureRule levenshtein_rule(int n, int k) {
  QuadratureRule rule;
  rule.n = n;
  rule.k = k;
  rule.nodes = gegenbauer_zeros(n, k);
  const Integer d = dgs_bound(n, 2 * k + 1);
  rule.endpoint_weight = Rational(1) / Rational(d);
  const double w = to_double(rule.endpoint_weight);

  // Row j (j = 1..2k): sum_i rho_i P_j(t_i) = -(P_j(1) + P_j(-1)) w, i.e. -2w for
  // even j and 0 for odd j. The nodes are symmetric, so the even rows alone
  // have repeated columns; the odd rows restore full column rank.
  Eigen::MatrixXd a(2 * k, k);
  Eigen::VectorXd rhs(2 * k);
  for (int j = 1; j <= 2 * k; ++j) rhs(j - 1) = j % 2 == 0 ? -2.0 * w : 0.0;
  for (int i = 0; i < k; ++i) {
    auto values = gegenbauer_values(n, 2 * k, rule.nodes[static_cast<std::size_t>(i)].value);
    for (int j = 1; j <= 2 * k; ++j) a(j - 1, i) = values[static_cast<std::size_t>(j)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < k) {
    throw SingularSystemError("Levenshtein weight system is singular for n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
  }
  Eigen::VectorXd rho = qr.solve(rhs);
  rule.weights.assign(rho.data(), rho.data() + rho.size());

  for (double r : rule.weights) {
    if (!(r > 0.0)) throw InternalConsistencyError("Levenshtein rule produced a non-positive weight");
  }
  for (int m = 0; m <= 2 * k; ++m) {
    const double exact = to_double(expand(Polynomial::monomial(m), n).coeff(0));
    const double got = rule.apply([m](double t) { return std::pow(t, m); });
    if (std::abs(got - exact) > 1e-10) {
      throw InternalConsistencyError("Levenshtein rule is not exact on t^" + std::to_string(m));
    }
  }
  return rule;
}

double test_function(const QuadratureRule& rule, int j) {
  if (j < 1) throw DomainError("test function index must be >= 1");
  return rule.apply([&rule, j](double t) { return gegenbauer_value(rule.n, j, t); });
}

double test_function(int n, int k, int j) { return test_function(levenshtein_rule(n, k), j); }

std::string classification_name(TestFunctionEntry::Classification c) {
  return c == TestFunctionEntry::Classification::proved_zero ? "proved_zero" : "computed";
}

std::string sign_name(TestFunctionEntry::Sign s) {
  switch (s) {
    case TestFunctionEntry::Sign::zero: return "zero";
    case TestFunctionEntry::Sign::positive: return "positive";
    case TestFunctionEntry::Sign::negative: return "negative";
    case TestFunctionEntry::Sign::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<int> TestFunctionTable::improvement_degrees() const {
  std::vector<int> out;
  for (const auto& e : entries) {
    if (e.sign == TestFunctionEntry::Sign::negative) out.push_back(e.j);
  }
  return out;
}

std::vector<int> TestFunctionTable::inconclusive_degrees() const {
  std::vector<int> out;
  for (const auto& e : entries) {
    if (e.sign == TestFunctionEntry::Sign::inconclusive) out.push_back(e.j);
  }
  return out;
}

TestFunctionTable optimality_scan(int n, int k, int jmax) {
  if (jmax < 2 * k) throw DomainError("jmax must be at least 2k");
  const QuadratureRule rule = levenshtein_rule(n, k);
  TestFunctionTable table;
  table.n = n;
  table.k = k;
  for (int j = 1; j <= jmax; ++j) {
    TestFunctionEntry e;
    e.j = j;
    e.value = test_function(rule, j);
    if (j <= 2 * k || j % 2 == 1) {
      e.classification = TestFunctionEntry::Classification::proved_zero;
      e.sign = TestFunctionEntry::Sign::zero;
    } else if (e.value < -kNegativeTestThreshold) {
      e.sign = TestFunctionEntry::Sign::negative;
    } else if (e.value > kNegativeTestThreshold) {
      e.sign = TestFunctionEntry::Sign::positive;
    } else {
      e.sign = TestFunctionEntry::Sign::inconclusive;
    }
    table.entries.push_back(e);
  }
  return table;
}

}  // namespace kkbounds
