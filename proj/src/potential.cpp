#include "kkbounds/potential.hpp"

#include "kkbounds/errors.hpp"
#include "kkbounds/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace kkbounds {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_param(const char* family, double value) {
  std::ostringstream os;
  os.precision(12);
  os << family << ':' << value;
  return os.str();
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Potential Potential::riesz(double s) {
  if (!(s > 0) || !std::isfinite(s)) throw DomainError("riesz exponent must be positive");
  return Potential(Riesz{s}, format_param("riesz", s));
}

Potential Potential::gaussian(double sigma) {
  if (!(sigma > 0) || !std::isfinite(sigma)) throw DomainError("gaussian sigma must be positive");
  return Potential(Gaussian{sigma}, format_param("gaussian", sigma));
}

Potential Potential::polynomial(Polynomial p) {
  if (!check_nonnegative(p, Rational(-1), Rational(1)).holds) {
    throw DomainError("polynomial potential takes negative values on [-1, 1]");
  }
  return Potential(std::move(p), "poly");
}

Potential Potential::tabulated(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw DomainError("tabulated potential needs at least two samples");
  std::sort(samples.begin(), samples.end());
  if (samples.front().first > -1.0 || samples.back().first < 1.0) {
    throw DomainError("tabulated potential must cover [-1, 1]");
  }
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (samples[i].first == samples[i + 1].first) throw DomainError("tabulated potential has repeated abscissae");
  }
  for (const auto& [t, h] : samples) {
    if (!(h >= 0)) throw DomainError("potential values must be nonnegative");
  }
  return Potential(Tabulated{std::move(samples)}, "tabulated");
}

double Potential::operator()(double t) const {
  return std::visit(
      Overloaded{
          [t](const Riesz& r) {
            double d = 2.0 - 2.0 * t;
            return d <= 0.0 ? kInf : std::pow(d, -r.s / 2.0);
          },
          [t](const Gaussian& g) { return std::exp(g.sigma * (t - 1.0)); },
          [t](const Polynomial& p) { return p(t); },
          [t](const Tabulated& tab) {
            const auto& s = tab.samples;
            auto it = std::lower_bound(s.begin(), s.end(), t,
                                       [](const auto& sample, double x) { return sample.first < x; });
            if (it == s.begin()) return s.front().second;
            if (it == s.end()) return s.back().second;
            const auto& [t1, h1] = *it;
            const auto& [t0, h0] = *(it - 1);
            return h0 + (h1 - h0) * (t - t0) / (t1 - t0);
          },
      },
      kind_);
}

double Potential::derivative_bound(double a, double b) const {
  return std::visit(
      Overloaded{
          // Riesz and Gaussian derivatives are positive and increasing in t.
          [b](const Riesz& r) {
            double d = 2.0 - 2.0 * b;
            return d <= 0.0 ? kInf : r.s * std::pow(d, -r.s / 2.0 - 1.0);
          },
          [b](const Gaussian& g) { return g.sigma * std::exp(g.sigma * (b - 1.0)); },
          [a, b](const Polynomial& p) {
            Polynomial d = p.derivative();
            double bound = 0.0;
            double r = std::max(std::abs(a), std::abs(b));
            double power = 1.0;
            for (const auto& c : d.coeffs()) {
              bound += std::abs(to_double(c)) * power;
              power *= r;
            }
            return bound;
          },
          [a, b](const Tabulated& tab) {
            double bound = 0.0;
            const auto& s = tab.samples;
            for (std::size_t i = 0; i + 1 < s.size(); ++i) {
              if (s[i + 1].first < a || s[i].first > b) continue;
              bound = std::max(bound, std::abs((s[i + 1].second - s[i].second) / (s[i + 1].first - s[i].first)));
            }
            return bound;
          },
      },
      kind_);
}

}  // namespace kkbounds
