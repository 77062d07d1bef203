#include "kkbounds/roots.hpp"

#include "kkbounds/errors.hpp"

namespace kkbounds {

double RootInterval::approx() const { return to_double((lo + hi) / 2); }

SturmSequence::SturmSequence(const Polynomial& squarefree) {
  if (squarefree.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(squarefree);
  chain_.push_back(squarefree.derivative());
  while (!chain_.back().is_zero()) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    // Only signs matter; rescaling by a positive constant keeps numbers small.
    if (!r.is_zero()) r *= Rational(1) / abs(r.leading());
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int previous = 0;
  for (const auto& p : chain_) {
    int s = sign(p(x));
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return sign_changes(a) - sign_changes(b);
}

namespace {

void isolate_open(const Polynomial& g, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
  SturmSequence sturm(g);
  int n = sturm.count(lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (g(mid) == 0) {
    Polynomial deflated = divmod(g, linear_factor(mid)).first;
    isolate_open(deflated, lo, mid, out);
    out.push_back({mid, mid});
    isolate_open(deflated, mid, hi, out);
    return;
  }
  isolate_open(g, lo, mid, out);
  isolate_open(g, mid, hi, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  if (a > b) throw DomainError("isolate_roots: empty interval");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;

  Polynomial g = squarefree_part(p);
  bool root_at_a = g(a) == 0;
  bool root_at_b = a != b && g(b) == 0;
  if (root_at_a) g = divmod(g, linear_factor(a)).first;
  if (root_at_b) g = divmod(g, linear_factor(b)).first;

  if (root_at_a) out.push_back({a, a});
  if (a < b && g.degree() > 0) isolate_open(g, a, b, out);
  if (root_at_b) out.push_back({b, b});
  return out;
}

void refine_root(const Polynomial& g, RootInterval& root, const Rational& max_width) {
  if (root.exact()) return;
  // Endpoints may be roots of g that were deflated during isolation; divide
  // them out so both ends carry a sign.
  Polynomial h = g;
  while (h.degree() > 0 && h(root.lo) == 0) h = divmod(h, linear_factor(root.lo)).first;
  while (h.degree() > 0 && h(root.hi) == 0) h = divmod(h, linear_factor(root.hi)).first;
  int s_lo = sign(h(root.lo));
  while (root.width() > max_width) {
    Rational mid = (root.lo + root.hi) / 2;
    int s = sign(h(mid));
    if (s == 0) {
      root.lo = root.hi = mid;
      return;
    }
    if (s == s_lo) {
      root.lo = mid;
    } else {
      root.hi = mid;
    }
  }
}

NonnegativityResult check_nonnegative(const Polynomial& p, const Rational& a, const Rational& b) {
  NonnegativityResult result;
  if (p.is_zero()) {
    result.holds = true;
    result.min_sampled = 0;
    result.witness = a;
    return result;
  }

  // p keeps one sign between consecutive distinct roots, so one sample per gap
  // decides nonnegativity on all of [a, b].
  std::vector<Rational> samples{a, b};
  auto roots = isolate_roots(p, a, b);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  for (const auto& r : roots) {
    if (r.exact()) continue;
    samples.push_back(r.lo);
    samples.push_back(r.hi);
  }

  bool first = true;
  for (const auto& s : samples) {
    Rational v = p(s);
    if (first || v < result.min_sampled) {
      result.min_sampled = v;
      result.witness = s;
      first = false;
    }
  }
  result.holds = result.min_sampled >= 0;
  return result;
}

}  // namespace kkbounds
