#include "hayman/ratfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace hayman {

RatFunc RatFunc::make(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) return RatFunc();
  Poly g = gcd(n, d);
  Poly nn = exact_div(n, g);
  Poly dd = exact_div(d, g);
  Rational lead = dd.leading();
  if (lead != 1) {
    Rational inv = 1 / lead;
    nn *= inv;
    dd *= inv;
  }
  return RatFunc(std::move(nn), std::move(dd), 0);
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  if (f.den_ == g.den_) return RatFunc::make(f.num_ + g.num_, f.den_);
  return RatFunc::make(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f) { return RatFunc(-f.num_, f.den_, 0); }

RatFunc operator-(const RatFunc& f, const RatFunc& g) { return f + (-g); }

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  if (f.is_zero() || g.is_zero()) return RatFunc();
  // cross-cancel first; the result is then already coprime
  Poly g1 = gcd(f.num_, g.den_);
  Poly g2 = gcd(g.num_, f.den_);
  Poly n = exact_div(f.num_, g1) * exact_div(g.num_, g2);
  Poly d = exact_div(f.den_, g2) * exact_div(g.den_, g1);
  return RatFunc::make(n, d);
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of the zero rational function");
  return make(den_, num_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero rational function");
  return f * g.reciprocal();
}

RatFunc RatFunc::derivative() const {
  if (is_zero() || is_polynomial()) return RatFunc(num_.derivative() * (1 / den_.leading()));
  return make(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::shift(const Rational& s) const { return make(num_.shift(s), den_.shift(s)); }

std::optional<Rational> RatFunc::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d == 0) return std::nullopt;
  return num_(x) / d;
}

RatFunc pow(const RatFunc& f, int k) {
  if (k < 0) return pow(f.reciprocal(), -k);
  return RatFunc::make(pow(f.numer(), static_cast<unsigned>(k)), pow(f.denom(), static_cast<unsigned>(k)));
}

SplitParts split(const RatFunc& f) {
  auto [q, r] = divmod(f.numer(), f.denom());
  return {q, RatFunc::make(r, f.denom())};
}

InfinityBehaviour degree_at_infinity(const RatFunc& f) {
  if (f.is_zero()) throw std::domain_error("degree_at_infinity of the zero function");
  return {f.numer().degree() - f.denom().degree(), f.numer().leading() / f.denom().leading()};
}

std::optional<std::complex<double>> eval_complex(const RatFunc& f, std::complex<double> x,
                                                 double eps_pole) {
  std::complex<double> d = f.denom().eval(x);
  if (std::abs(d) < eps_pole) return std::nullopt;
  return f.numer().eval(x) / d;
}

std::string to_string(const RatFunc& f) {
  if (f.is_polynomial()) return to_string(f.numer());
  return "(" + to_string(f.numer()) + ")/(" + to_string(f.denom()) + ")";
}

}  // namespace hayman
