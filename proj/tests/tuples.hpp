#pragma once

#include <random>
#include <string>
#include <vector>

#include "hayman/classifier.hpp"
#include "test_util.hpp"

namespace hayman::testing {

// Coefficient tuples built so that a branch of the classification matches.
inline Coefficients random_tuple(std::mt19937_64& rng, int kind) {
  using hayman::testing::random_linear_product;
  using hayman::testing::random_ratfunc;
  std::uniform_int_distribution<int> small(-3, 3);
  switch (kind % 7) {
    case 0: {  // Case4
      RatFunc a = random_ratfunc(rng, 1, 3), h1 = random_ratfunc(rng, 1, 3), h2 = random_ratfunc(rng, 1, 3);
      RatFunc beta = random_ratfunc(rng, 1, 3);
      RatFunc b = -h1.derivative() - a * h1;
      return {a, b, h2.derivative() - (h1 - a) * h2 - beta * h1, beta, -h2 * h2 - beta * h2};
    }
    case 1: {  // Case5, beta = 0, gamma = u
      RatFunc u = random_linear_product(rng, 2);
      RatFunc a = q(small(rng), 2) / (Z - q(small(rng)));
      RatFunc A = -u.derivative() / u - 2 * a;
      return {a, (A.derivative() + a * A) / 2, q(0), q(0), u};
    }
    case 2: {  // Case1
      RatFunc al = random_linear_product(rng, 2);
      RatFunc la = al.derivative() / al;
      return {q(0), -la.derivative(), al, q(0), q(0)};
    }
    case 3: {  // Case3
      RatFunc a = random_ratfunc(rng, 1, 3), beta = random_ratfunc(rng, 1, 3);
      return {a, random_ratfunc(rng, 1, 3), -beta.derivative() - a * beta, beta, q(0)};
    }
    case 4:  // autonomous
      return {q(small(rng)), q(small(rng)), q(small(rng)), q(small(rng)), q(small(rng) == 0 ? 1 : small(rng))};
    case 5: {  // Case5e shape
      RatFunc beta = random_ratfunc(rng, 1, 3);
      RatFunc a = random_ratfunc(rng, 1, 3);
      RatFunc gamma = beta * beta / 4;
      if (gamma.is_zero()) gamma = q(1);
      RatFunc alpha = random_ratfunc(rng, 1, 3);
      RatFunc A = (beta * (alpha + beta.derivative()) - gamma.derivative() - a * (2 * gamma - beta * beta)) / gamma;
      return {a, (A.derivative() + a * A) / 2, alpha, beta, gamma};
    }
    default:
      return {random_ratfunc(rng, 2), random_ratfunc(rng, 2), random_ratfunc(rng, 2), random_ratfunc(rng, 2),
              random_ratfunc(rng, 2)};
  }
}

inline std::vector<std::string> labels(const Classification& cl) {
  std::vector<std::string> out;
  for (const auto& b : cl.branches) out.push_back(label(b));
  return out;
}

}  // namespace hayman::testing
