#pragma once

#include <optional>
#include <vector>

#include "hayman/poly.hpp"
#include "hayman/ratfunc.hpp"

namespace hayman {

struct SquarefreeFactor {
  Poly factor;  // squarefree, monic, nonconstant
  int multiplicity;
};

/// p = unit * prod factor_i^multiplicity_i, factors pairwise coprime.
struct SquarefreeDecomp {
  std::vector<SquarefreeFactor> factors;
  Rational unit;
};

/// Yun's algorithm. Throws std::invalid_argument for the zero polynomial.
SquarefreeDecomp squarefree_decomposition(const Poly& p);

/// Monic squarefree part (product of the distinct factors).
Poly squarefree_part(const Poly& p);

/// A polynomial in z whose coefficients are polynomials in a second variable t.
/// Entry k is the coefficient of z^k; the vector length fixes the formal degree.
using BiPoly = std::vector<Poly>;

/// Res_z(p, q) = lc(q)^{deg_z p} * prod_{q(b)=0} p(b), a polynomial in t.
/// deg_z p is the formal degree (p.size() - 1). Throws if q is zero.
Poly resultant(const BiPoly& p, const Poly& q);

/// Resultant of two rational polynomials with the same convention.
Rational resultant(const Poly& p, const Poly& q);

struct RationalRoot {
  Rational value;
  int multiplicity;
};

/// All rational roots with multiplicities. Throws std::invalid_argument for p = 0.
std::vector<RationalRoot> rational_roots(const Poly& p);

/// Solution set {x : M x = rhs} of an exact rational linear system.
struct LinearSolution {
  std::optional<std::vector<Rational>> particular;  // nullopt when inconsistent
  std::vector<std::vector<Rational>> nullspace;
};

/// Gauss-Jordan elimination over the rationals. `matrix` is row-major.
LinearSolution solve_linear_system(std::vector<std::vector<Rational>> matrix,
                                   std::vector<Rational> rhs);

}  // namespace hayman
