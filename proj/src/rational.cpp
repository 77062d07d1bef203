#include "kkbounds/rational.hpp"

#include "kkbounds/errors.hpp"

#include <cctype>
#include <cmath>

namespace kkbounds {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    throw FormatError("not an integer: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw FormatError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    std::string_view digits = whole;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
    if (digits.empty() && frac.empty()) throw FormatError("not a number: '" + std::string(text) + "'");
    if (!digits.empty() && !is_integer_literal(digits)) throw FormatError("not a number: '" + std::string(text) + "'");
    if (!frac.empty() && !is_integer_literal(frac)) throw FormatError("not a number: '" + std::string(text) + "'");
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) throw FormatError("not a number: '" + std::string(text) + "'");
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer num = (digits.empty() ? Integer(0) : Integer(std::string(digits))) * scale +
                  (frac.empty() ? Integer(0) : Integer(std::string(frac)));
    Rational r(num, scale);
    return negative ? Rational(-r) : r;
  }

  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  return value.str();
}

std::string to_string(const Integer& value) {
  return value.str();
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert non-finite double to a rational");
  return Rational(value);
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

int sign(const Rational& value) {
  return value.sign();
}

}  // namespace kkbounds
