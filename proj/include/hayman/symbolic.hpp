#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hayman/algebra.hpp"
#include "hayman/ratfunc.hpp"

namespace hayman {

// ---------------------------------------------------------------------------
// Residues
// ---------------------------------------------------------------------------

struct ResidueComponent {
  Rational residue;
  Poly component;  // gcd(numer - residue*denom', denom): the poles carrying this residue
};

/// Residues of f at its simple poles, via the Rothstein-Trager resultant.
///
/// The spectrum polynomial is Res_z(numer - t*denom', simple) where `simple`
/// is the product of the multiplicity-one squarefree factors of denom; it
/// equals denom when all poles are simple. Residues at poles of order >= 2 are
/// not reported.
struct ResidueSpectrum {
  Poly spectrum_poly;
  std::vector<ResidueComponent> rational_residues;
  bool all_poles_simple = true;
  bool nonrational_residues_present = false;
};

ResidueSpectrum residue_spectrum(const RatFunc& f);

// ---------------------------------------------------------------------------
// e^{int f}
// ---------------------------------------------------------------------------

/// e^{int f} = u, rational.
struct RationalU {
  RatFunc u;
};
/// e^{int f} = u e^{v}, v a polynomial of degree >= 1 with v(0) = 0.
struct MeromorphicUeV {
  RatFunc u;
  Poly v;
};
/// e^{2 int f} is meromorphic but e^{int f} branches (half-integer residues).
struct HalfIntegerAlgebroid {
  std::string diagnostic;
};
struct NotMeromorphic {
  std::string diagnostic;
};
using ExpIntegralClass = std::variant<RationalU, MeromorphicUeV, HalfIntegerAlgebroid, NotMeromorphic>;

ExpIntegralClass exp_integral_form(const RatFunc& f);

/// u with u'/u = f when e^{int f} is rational, normalized as a product of monic factors.
std::optional<RatFunc> rational_exp_integral(const RatFunc& f);

std::string describe(const ExpIntegralClass& c);

// ---------------------------------------------------------------------------
// Structural predicates
// ---------------------------------------------------------------------------

/// s with s^2 = f and positive leading coefficient, when f is a square in Q(z).
std::optional<RatFunc> is_square(const RatFunc& f);

/// The value of f when f is a constant.
std::optional<Rational> constant_value(const RatFunc& f);

/// {c : P + c*Q is constant}: empty, one value, or every rational c.
struct ConstancySolution {
  enum class Kind { None, Unique, All } kind = Kind::None;
  Rational value;  // meaningful for Unique
};
ConstancySolution solve_scalar_for_constancy(const RatFunc& P, const RatFunc& Q);

Poly poly_antiderivative(const Poly& p);

/// Rational F with F' = f when one exists. The result has no constant term in
/// its polynomial part, so it is unique.
std::optional<RatFunc> rational_antiderivative(const RatFunc& f);

// ---------------------------------------------------------------------------
// Rational solutions of y' = f y + g
// ---------------------------------------------------------------------------

struct LinearOdeBounds {
  int max_pole_multiplicity = 30;
  int max_numerator_degree = 30;
};

/// All rational solutions as an affine family particular + c * homogeneous,
/// with c a free symbolic constant.
struct RationalSolutionFamily {
  std::optional<RatFunc> particular;   // absent: no rational solution at all
  std::optional<RatFunc> homogeneous;  // absent: no free constant
  bool complete = true;                // false when a search bound was hit
  std::string diagnostic;

  [[nodiscard]] bool empty() const { return !particular.has_value(); }
  [[nodiscard]] RatFunc instantiate(const Rational& c) const;
};

RationalSolutionFamily rational_solutions_linear_ode(const RatFunc& f, const RatFunc& g,
                                                     const LinearOdeBounds& bounds = {});

}  // namespace hayman
