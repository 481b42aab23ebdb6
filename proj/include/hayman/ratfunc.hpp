#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>

#include "hayman/poly.hpp"

namespace hayman {

/// Default threshold on |denominator| below which complex evaluation reports a pole.
inline constexpr double kDefaultPoleEpsilon = 1e-9;

/// Rational function numer/denom over the rationals in canonical form:
/// the denominator is monic and coprime to the numerator; zero is 0/1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(implicit)
  RatFunc(long c) : RatFunc(Rational(c)) {}                    // NOLINT(implicit)
  RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT(implicit)

  /// Normalizes n/d. Throws std::domain_error when d is zero.
  static RatFunc make(const Poly& n, const Poly& d);
  static RatFunc z() { return RatFunc(Poly::z()); }

  [[nodiscard]] const Poly& numer() const { return num_; }
  [[nodiscard]] const Poly& denom() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.degree() == 0; }

  [[nodiscard]] RatFunc derivative() const;
  /// f(z + s)
  [[nodiscard]] RatFunc shift(const Rational& s) const;
  [[nodiscard]] RatFunc reciprocal() const;

  /// Exact value at a rational point; std::nullopt at a pole.
  [[nodiscard]] std::optional<Rational> operator()(const Rational& x) const;

  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  /// Throws std::domain_error when g is zero.
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f);
  RatFunc& operator+=(const RatFunc& g) { return *this = *this + g; }
  RatFunc& operator-=(const RatFunc& g) { return *this = *this - g; }
  RatFunc& operator*=(const RatFunc& g) { return *this = *this * g; }
  RatFunc& operator/=(const RatFunc& g) { return *this = *this / g; }
  friend bool operator==(const RatFunc& f, const RatFunc& g) = default;

 private:
  RatFunc(Poly n, Poly d, int /*already_normal*/) : num_(std::move(n)), den_(std::move(d)) {}
  Poly num_;
  Poly den_;
};

RatFunc pow(const RatFunc& f, int k);

/// f = poly_part + proper_part with deg numer(proper) < deg denom(proper).
struct SplitParts {
  Poly poly_part;
  RatFunc proper_part;
};
SplitParts split(const RatFunc& f);

/// f(z) = leading * z^degree * (1 + o(1)) as z -> infinity.
struct InfinityBehaviour {
  int degree;
  Rational leading;
};
/// Throws std::domain_error for the zero function.
InfinityBehaviour degree_at_infinity(const RatFunc& f);

/// Horner evaluation; std::nullopt marks a (near-)pole where |denom(z)| < eps_pole.
std::optional<std::complex<double>> eval_complex(const RatFunc& f, std::complex<double> x,
                                                 double eps_pole = kDefaultPoleEpsilon);

/// Canonical printable form, e.g. "(z^2 + 1)/(z^2 - 2)" or "3*z - 1/2".
std::string to_string(const RatFunc& f);

}  // namespace hayman
