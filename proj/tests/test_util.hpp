#pragma once

#include <random>

#include "hayman/ratfunc.hpp"

namespace hayman::testing {

inline const RatFunc Z = RatFunc::z();

inline RatFunc q(long n, long d = 1) { return RatFunc(Rational(n, d)); }

/// Random polynomial with small integer-over-small-integer coefficients.
inline Poly random_poly(std::mt19937_64& rng, int max_degree, int coeff_range = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-coeff_range, coeff_range);
  std::uniform_int_distribution<int> den(1, 3);
  const int d = deg(rng);
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = Rational(num(rng), den(rng));
  if (c.back() == 0) c.back() = 1;
  return Poly(std::move(c));
}

inline RatFunc random_ratfunc(std::mt19937_64& rng, int max_degree, int coeff_range = 5) {
  Poly d;
  while (d.is_zero()) d = random_poly(rng, max_degree, coeff_range);
  return RatFunc::make(random_poly(rng, max_degree, coeff_range), d);
}

/// Product of (z - r_i)^{e_i} with small integer roots and exponents in [-3, 3].
inline RatFunc random_linear_product(std::mt19937_64& rng, int factors = 3) {
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> expo(-3, 3);
  RatFunc u(1);
  for (int i = 0; i < factors; ++i) u *= pow(Z - q(root(rng)), expo(rng));
  return u;
}

}  // namespace hayman::testing
