#include "hayman/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hayman {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly Poly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return Poly(std::move(d));
}

Poly Poly::shift(const Rational& s) const {
  // Horner in the ring: p(z+s) = (...(c_n (z+s) + c_{n-1})(z+s) + ...)
  Poly lin{s, Rational(1)};
  Poly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out = out * lin;
    out += Poly(*it);
  }
  return out;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  auto ac = a.coefficients();
  std::vector<Rational> r(ac.begin(), ac.end());
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Rational> q(static_cast<std::size_t>(dq) + 1);
  const Rational inv_lead = 1 / b.leading();
  auto bc = b.coefficients();
  for (int k = dq; k >= 0; --k) {
    Rational t = r[static_cast<std::size_t>(k + db)] * inv_lead;
    q[static_cast<std::size_t>(k)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= t * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    // keep intermediate remainders monic to limit coefficient growth
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

Poly pow(const Poly& p, unsigned k) {
  Poly result(Rational(1)), base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto c = p.coefficients();
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& a = c[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    Rational mag = a < 0 ? Rational(-a) : a;
    if (first) {
      if (a < 0) os << '-';
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << '*';
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace hayman
