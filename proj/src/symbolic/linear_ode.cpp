#include <algorithm>
#include <stdexcept>

#include "hayman/symbolic.hpp"

namespace hayman {
namespace {

// Caps every squarefree multiplicity of d at `cap`; reports whether anything was cut.
Poly cap_multiplicities(const Poly& d, int cap, bool& clipped) {
  if (d.degree() <= 0) return Poly(Rational(1));
  Poly out(Rational(1));
  for (const auto& [factor, mult] : squarefree_decomposition(d).factors) {
    if (mult > cap) clipped = true;
    out *= pow(factor, static_cast<unsigned>(std::min(mult, cap)));
  }
  return out;
}

bool solves(const RatFunc& y, const RatFunc& f, const RatFunc& g) {
  return (y.derivative() - f * y - g).is_zero();
}

}  // namespace

RatFunc RationalSolutionFamily::instantiate(const Rational& c) const {
  if (!particular) throw std::logic_error("instantiate: empty solution family");
  if (!homogeneous) return *particular;
  return *particular + RatFunc(c) * *homogeneous;
}

RationalSolutionFamily rational_solutions_linear_ode(const RatFunc& f, const RatFunc& g,
                                                     const LinearOdeBounds& bounds) {
  RationalSolutionFamily fam;
  bool clipped = false;

  // Candidate denominator: every pole of g to its full order, plus the poles of
  // f where local balance y ~ (z-z0)^{-k}, k = -residue, allows a pole.
  Poly den = g.denom();
  if (!f.is_zero()) {
    for (const auto& r : residue_spectrum(f).rational_residues) {
      Integer k = ceil(Rational(-r.residue));
      if (k <= 0) continue;
      if (k > bounds.max_pole_multiplicity) {
        clipped = true;
        k = bounds.max_pole_multiplicity;
      }
      den = lcm(den, pow(r.component, k.convert_to<unsigned>()));
    }
  }
  den = cap_multiplicities(den, bounds.max_pole_multiplicity, clipped);

  // Growth at infinity: y ~ z^e.
  long e_max = 0;
  if (!g.is_zero()) {
    const int dg = degree_at_infinity(g).degree;
    e_max = std::max<long>(e_max, dg + 1);
    if (!f.is_zero()) e_max = std::max<long>(e_max, dg - degree_at_infinity(f).degree);
  }
  if (!f.is_zero()) {
    auto inf = degree_at_infinity(f);
    if (inf.degree == -1 && is_integer(inf.leading))
      e_max = std::max<long>(e_max, numer(inf.leading).convert_to<long>());
  }
  long nd = den.degree() + e_max;
  if (nd > bounds.max_numerator_degree) {
    clipped = true;
    nd = bounds.max_numerator_degree;
  }
  nd = std::max<long>(nd, 0);

  // (N/D)' = f N/D + g, cleared of denominators:
  //   (N'D - N D') fd gd - fn N D gd - gn D^2 fd = 0
  const Poly& fn = f.numer();
  const Poly& fd = f.denom();
  const Poly& gn = g.numer();
  const Poly& gd = g.denom();
  const Poly dden = den.derivative();
  const Poly fdgd = fd * gd;
  const Poly rhs_poly = gn * den * den * fd;

  std::vector<Poly> columns;
  int rows = std::max(rhs_poly.degree(), 0) + 1;
  for (long i = 0; i <= nd; ++i) {
    const int ii = static_cast<int>(i);
    Poly zi = Poly::monomial(Rational(1), ii);
    Poly dzi = ii == 0 ? Poly() : Poly::monomial(Rational(ii), ii - 1);
    Poly col = (dzi * den - zi * dden) * fdgd - fn * zi * den * gd;
    rows = std::max(rows, col.degree() + 1);
    columns.push_back(std::move(col));
  }

  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows), std::vector<Rational>(columns.size()));
  std::vector<Rational> rhs(static_cast<std::size_t>(rows));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (int r = 0; r < rows; ++r) m[static_cast<std::size_t>(r)][j] = columns[j].coeff(static_cast<std::size_t>(r));
  for (int r = 0; r < rows; ++r) rhs[static_cast<std::size_t>(r)] = rhs_poly.coeff(static_cast<std::size_t>(r));

  auto sol = solve_linear_system(std::move(m), std::move(rhs));
  fam.complete = !clipped;
  if (clipped) fam.diagnostic = "incomplete search: pole-multiplicity or numerator-degree bound reached";
  if (!sol.particular) return fam;
  if (sol.nullspace.size() > 1)
    throw std::logic_error("rational_solutions_linear_ode: homogeneous solution space of dimension > 1");

  fam.particular = RatFunc::make(Poly(*sol.particular), den);
  if (!sol.nullspace.empty()) fam.homogeneous = RatFunc::make(Poly(sol.nullspace.front()), den);

  if (!solves(*fam.particular, f, g) || (fam.homogeneous && !solves(*fam.homogeneous, f, RatFunc())))
    throw std::logic_error("rational_solutions_linear_ode: back-substitution failed");
  return fam;
}

}  // namespace hayman
