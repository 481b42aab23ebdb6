#include <numeric>
#include <sstream>

#include "hayman/symbolic.hpp"

namespace hayman {

ResidueSpectrum residue_spectrum(const RatFunc& f) {
  ResidueSpectrum out;
  out.spectrum_poly = Poly(Rational(1));
  const RatFunc proper = split(f).proper_part;
  if (proper.is_zero()) return out;

  const Poly& d = proper.denom();
  Poly simple(Rational(1));
  for (const auto& [factor, mult] : squarefree_decomposition(d).factors) {
    if (mult == 1)
      simple = factor;
    else
      out.all_poles_simple = false;
  }
  if (simple.degree() <= 0) return out;

  // numer - t*denom' as a polynomial in z with coefficients in t;
  // modulo `simple` this is the residue form even when denom has repeated factors
  const Poly& n = proper.numer();
  const Poly dd = d.derivative();
  const int width = std::max(n.degree(), dd.degree()) + 1;
  BiPoly p(static_cast<std::size_t>(width));
  for (int k = 0; k < width; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    p[ku] = Poly{n.coeff(ku), -dd.coeff(ku)};
  }
  out.spectrum_poly = resultant(p, simple);

  int covered = 0;
  for (const auto& root : rational_roots(out.spectrum_poly)) {
    Poly comp = gcd(n - root.value * dd, simple);
    if (comp.degree() <= 0) continue;
    covered += comp.degree();
    out.rational_residues.push_back({root.value, comp});
  }
  out.nonrational_residues_present = covered < simple.degree();
  return out;
}

}  // namespace hayman
