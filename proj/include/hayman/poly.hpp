#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hayman/rational.hpp"

namespace hayman {

/// Degree reported for the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over the rationals in the variable z.
///
/// Coefficients are stored in increasing order of degree. The representation
/// is trimmed: the leading coefficient is nonzero, and the zero polynomial is
/// the empty sequence.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(const Rational& c);

  static Poly monomial(const Rational& c, int k);
  static Poly z() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
  [[nodiscard]] std::span<const Rational> coefficients() const { return c_; }

  /// Coefficient of z^k; zero beyond the degree.
  [[nodiscard]] Rational coeff(std::size_t k) const;
  [[nodiscard]] const Rational& leading() const;
  [[nodiscard]] Poly monic() const;

  [[nodiscard]] Poly derivative() const;
  /// p(z + s), computed exactly.
  [[nodiscard]] Poly shift(const Rational& s) const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] std::complex<double> eval(std::complex<double> x) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact quotient; throws std::domain_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);
Poly pow(const Poly& p, unsigned k);

/// Human- and parser-readable form, e.g. "3/4*z^2 - z + 1/2".
std::string to_string(const Poly& p);

}  // namespace hayman
