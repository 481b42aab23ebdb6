#include <algorithm>
#include <stdexcept>

#include "hayman/algebra.hpp"

namespace hayman {
namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// Sylvester determinant of (q, p) with p given by its formal coefficient list
// (low to high), so the value is lc(q)^{m} * prod p(roots of q).
Rational sylvester(const std::vector<Rational>& p, const Poly& q) {
  const int m = static_cast<int>(p.size()) - 1;
  const int n = q.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(static_cast<std::size_t>(size),
                                       std::vector<Rational>(static_cast<std::size_t>(size)));
  // m rows of q, n rows of p, coefficients from high to low
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = q.coeff(static_cast<std::size_t>(n - k));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = p[static_cast<std::size_t>(m - k)];
  return determinant(std::move(s));
}

}  // namespace

Rational resultant(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("resultant with the zero polynomial");
  if (p.is_zero()) return q.degree() == 0 ? Rational(1) : Rational(0);
  auto pc = p.coefficients();
  return sylvester(std::vector<Rational>(pc.begin(), pc.end()), q);
}

Poly resultant(const BiPoly& p, const Poly& q) {
  if (q.is_zero()) throw std::invalid_argument("resultant with the zero polynomial");
  if (p.empty()) return q.degree() == 0 ? Poly(Rational(1)) : Poly();
  int deg_t = 0;
  for (const auto& c : p) deg_t = std::max(deg_t, c.is_zero() ? 0 : c.degree());
  const int bound = deg_t * std::max(q.degree(), 0);

  // evaluate at t = 0..bound and interpolate (Newton form)
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= bound; ++i) {
    Rational t(i);
    std::vector<Rational> pt;
    pt.reserve(p.size());
    for (const auto& c : p) pt.push_back(c(t));
    xs.push_back(t);
    ys.push_back(sylvester(pt, q));
  }
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < xs.size(); ++j)
    for (std::size_t i = xs.size() - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly out;
  for (std::size_t i = dd.size(); i-- > 0;) {
    out = out * Poly{-xs[i], Rational(1)};
    out += Poly(dd[i]);
  }
  return out;
}

}  // namespace hayman
