#pragma once

#include "kkbounds/polynomial.hpp"
#include "kkbounds/rational.hpp"

#include <vector>

namespace kkbounds {

/// A real root known to lie in [lo, hi]. When lo == hi the root is exact;
/// otherwise it is the unique root of the isolated polynomial in the open
/// interval (lo, hi) and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  double approx() const;
};

/// Sturm chain of a square-free polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& squarefree);

  int sign_changes(const Rational& x) const;

  /// Number of distinct roots in (a, b); a and b must not be roots.
  int count(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> chain_;
};

/// Distinct real roots of p in the closed interval [a, b], increasing and
/// pairwise disjoint. p must be nonzero.
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b);

/// Bisects an isolating interval of the square-free polynomial g until its
/// width is at most max_width (or the root is hit exactly).
void refine_root(const Polynomial& g, RootInterval& root, const Rational& max_width);

struct NonnegativityResult {
  bool holds = false;
  // Smallest value of p among the exact sample points (one per sign-constant
  // gap between distinct roots, plus the endpoints).
  Rational min_sampled;
  Rational witness;
};

/// Exact decision of p(t) >= 0 for all t in [a, b].
NonnegativityResult check_nonnegative(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace kkbounds
