#include <cmath>
#include <stdexcept>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "hayman/series.hpp"

namespace hayman {
namespace {

// Power series of n/d from coefficient lists with d[0] != 0.
template <class T>
std::vector<T> series_quotient(const std::vector<T>& n, const std::vector<T>& d, int N) {
  std::vector<T> q(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    T acc = k < static_cast<int>(n.size()) ? n[static_cast<std::size_t>(k)] : T(0);
    const int top = std::min(k, static_cast<int>(d.size()) - 1);
    for (int j = 1; j <= top; ++j) acc -= d[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
    q[static_cast<std::size_t>(k)] = acc / d[0];
  }
  return q;
}

using mp_real = boost::multiprecision::cpp_bin_float_100;
using mp_complex = boost::multiprecision::cpp_complex_100;

template <class C>
C from_rational(const Rational& q) {
  if constexpr (std::is_same_v<C, cplx>) {
    return {to_double(q), 0.0};
  } else {
    return C(mp_real(numerator(q).str()) / mp_real(denominator(q).str()));
  }
}

template <class C>
cplx to_cplx(const C& x) {
  if constexpr (std::is_same_v<C, cplx>) {
    return x;
  } else {
    return {static_cast<double>(x.real()), static_cast<double>(x.imag())};
  }
}

// Taylor coefficients of p at z0 by repeated synthetic division.
template <class C>
std::vector<C> complex_shift(const Poly& p, C z0) {
  std::vector<C> c;
  for (const auto& x : p.coefficients()) c.push_back(from_rational<C>(x));
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += z0 * c[j];
  return c;
}

template <class C>
C conv(const std::vector<C>& x, const std::vector<C>& y, int n) {
  C acc(0);
  for (int k = 0; k <= n; ++k) acc += x[static_cast<std::size_t>(k)] * y[static_cast<std::size_t>(n - k)];
  return acc;
}

template <class C>
std::vector<C> coefficient_series(const RatFunc& f, cplx z0, int N) {
  if (f.is_zero()) return std::vector<C>(static_cast<std::size_t>(N) + 1, C(0));
  if (z0.imag() == 0.0) {
    const Rational s = from_double(z0.real());
    const Poly n = f.numer().shift(s);
    const Poly d = f.denom().shift(s);
    if (d.coeff(0) == 0) throw std::domain_error("taylor_coefficients: pole at z0");
    std::vector<Rational> nn(n.coefficients().begin(), n.coefficients().end());
    std::vector<Rational> dd(d.coefficients().begin(), d.coefficients().end());
    auto q = series_quotient(nn, dd, N);
    std::vector<C> out;
    out.reserve(q.size());
    for (const auto& x : q) out.push_back(from_rational<C>(x));
    return out;
  }
  const C w(z0.real(), z0.imag());
  auto n = complex_shift(f.numer(), w);
  auto d = complex_shift(f.denom(), w);
  if (std::abs(to_cplx(d[0])) < kDefaultPoleEpsilon) throw std::domain_error("taylor_coefficients: pole at z0");
  return series_quotient(n, d, N);
}

template <class C>
ComplexSeries solve(const Coefficients& c, cplx z0, cplx w0_, cplx w1_, int N) {
  if (N < 2) throw std::invalid_argument("taylor_solve: N must be at least 2");
  if (w0_ == cplx(0)) throw std::domain_error("taylor_solve: w(z0) = 0 makes the recurrence singular");
  const auto a = coefficient_series<C>(c.a, z0, N);
  const auto b = coefficient_series<C>(c.b, z0, N);
  const auto al = coefficient_series<C>(c.alpha, z0, N);
  const auto be = coefficient_series<C>(c.beta, z0, N);
  const auto ga = coefficient_series<C>(c.gamma, z0, N);

  const auto sz = static_cast<std::size_t>(N) + 1;
  const C w0(w0_.real(), w0_.imag());
  std::vector<C> w(sz, C(0)), dw(sz, C(0)), d2w(sz, C(0)), ww(sz, C(0)), dww(sz, C(0));
  w[0] = w0;
  w[1] = C(w1_.real(), w1_.imag());
  for (int n = 0; n + 2 <= N; ++n) {
    const auto un = static_cast<std::size_t>(n);
    dw[un] = C(static_cast<double>(n + 1)) * w[un + 1];
    ww[un] = conv(w, w, n);
    dww[un] = conv(dw, w, n);
    C rhs = conv(dw, dw, n) - conv(a, dww, n) - conv(b, ww, n) + conv(al, w, n) + conv(be, dw, n) + ga[un];
    C lhs_known(0);
    for (int k = 0; k < n; ++k) lhs_known += d2w[static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(n - k)];
    const C f(static_cast<double>(n + 1) * static_cast<double>(n + 2));
    w[un + 2] = (rhs - lhs_known) / (f * w0);
    d2w[un] = f * w[un + 2];
  }
  ComplexSeries out{z0, {}};
  out.coefficients.reserve(sz);
  for (const auto& x : w) out.coefficients.push_back(to_cplx(x));
  return out;
}

}  // namespace

cplx ComplexSeries::operator()(cplx z) const {
  const cplx t = z - base;
  cplx acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
  return acc;
}

cplx ComplexSeries::derivative(cplx z, int k) const {
  const cplx t = z - base;
  cplx acc = 0;
  for (int n = order(); n >= k; --n) {
    double f = 1;
    for (int j = 0; j < k; ++j) f *= n - j;
    acc = acc * t + f * coefficients[static_cast<std::size_t>(n)];
  }
  return acc;
}

std::vector<cplx> taylor_coefficients(const RatFunc& f, cplx z0, int N) {
  return coefficient_series<cplx>(f, z0, N);
}

ComplexSeries taylor_solve(const Coefficients& c, cplx z0, cplx w0, cplx w1, int N) {
  return solve<cplx>(c, z0, w0, w1, N);
}

ComplexSeries taylor_solve_extended(const Coefficients& c, cplx z0, cplx w0, cplx w1, int N) {
  return solve<mp_complex>(c, z0, w0, w1, N);
}

double series_back_substitution_error(const Coefficients& c, const ComplexSeries& s) {
  const int N = s.order();
  const auto a = taylor_coefficients(c.a, s.base, N);
  const auto b = taylor_coefficients(c.b, s.base, N);
  const auto al = taylor_coefficients(c.alpha, s.base, N);
  const auto be = taylor_coefficients(c.beta, s.base, N);
  const auto ga = taylor_coefficients(c.gamma, s.base, N);
  const auto sz = static_cast<std::size_t>(N) + 1;
  const auto& w = s.coefficients;
  std::vector<cplx> dw(sz), d2w(sz);
  for (int n = 0; n < N; ++n) dw[static_cast<std::size_t>(n)] = static_cast<double>(n + 1) * w[static_cast<std::size_t>(n + 1)];
  for (int n = 0; n + 1 < N; ++n)
    d2w[static_cast<std::size_t>(n)] = static_cast<double>(n + 1) * static_cast<double>(n + 2) * w[static_cast<std::size_t>(n + 2)];
  std::vector<cplx> ww(sz), dww(sz);
  for (int n = 0; n <= N - 2; ++n) {
    ww[static_cast<std::size_t>(n)] = conv(w, w, n);
    dww[static_cast<std::size_t>(n)] = conv(dw, w, n);
  }
  double worst = 0;
  for (int n = 0; n <= N - 2; ++n) {
    const cplx terms[] = {conv(d2w, w, n), -conv(dw, dw, n), conv(a, dww, n), conv(b, ww, n),
                          -conv(al, w, n), -conv(be, dw, n), -ga[static_cast<std::size_t>(n)]};
    cplx sum = 0;
    double scale = 0;
    for (const cplx& t : terms) {
      sum += t;
      scale += std::abs(t);
    }
    if (scale > 0) worst = std::max(worst, std::abs(sum) / scale);
  }
  return worst;
}

}  // namespace hayman
