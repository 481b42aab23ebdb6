#include "hayman/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace hayman {

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::domain_error("from_double: non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer
  auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{Integer(scaled)};
  Integer two_pow = Integer(1) << std::abs(exp);
  if (exp >= 0) return r * Rational(two_pow);
  return r / Rational(two_pow);
}

Integer floor(const Rational& q) {
  Integer n = numer(q), d = denom(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) {
  Integer f = floor(q);
  if (Rational(f) != q) f += 1;
  return f;
}

std::string to_string(const Rational& q) { return q.str(); }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = numer(q), d = denom(q);
  Integer sn = boost::multiprecision::sqrt(n);
  Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace hayman
