#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/miller_rabin.hpp>

#include "hayman/algebra.hpp"

namespace hayman {
namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(0x5eed);
  for (unsigned long c = 1;; ++c) {
    Integer y = rng() % n, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const Integer& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = (q * abs_int(x - y)) % n;
        }
        g = boost::multiprecision::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = boost::multiprecision::gcd(abs_int(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  std::mt19937 rng(42);
  if (boost::multiprecision::miller_rabin_test(n, 25, rng)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::map<Integer, int> factorize(Integer n) {
  std::map<Integer, int> out;
  n = abs_int(n);
  for (unsigned long p = 2; p < 10000 && Integer(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) factor_into(n, out);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Integer coefficients with content 1.
std::vector<Integer> primitive_integer(const Poly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) l = boost::multiprecision::lcm(l, denom(c));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    Integer v = numer(c) * (l / denom(c));
    out.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  for (auto& v : out) v /= g;
  return out;
}

std::vector<Rational> roots_of_squarefree(const Poly& f) {
  std::vector<Rational> roots;
  Poly g = f;
  if (g.coeff(0) == 0) {
    roots.emplace_back(0);
    g = exact_div(g, Poly::z());
  }
  if (g.degree() <= 0) return roots;
  auto ic = primitive_integer(g);
  auto lead_divs = divisors(ic.back());
  auto trail_divs = divisors(ic.front());
  for (const auto& q : lead_divs) {
    for (const auto& p : trail_divs) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      for (int sign : {1, -1}) {
        Rational cand(Integer(sign * p), q);
        if (g(cand) == 0) roots.push_back(cand);
      }
    }
    if (static_cast<int>(roots.size()) == f.degree()) break;
  }
  return roots;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<RationalRoot> out;
  if (p.degree() <= 0) return out;
  for (const auto& [factor, mult] : squarefree_decomposition(p).factors)
    for (const auto& r : roots_of_squarefree(factor)) out.push_back({r, mult});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
  return out;
}

}  // namespace hayman
