#include <sstream>

#include "hayman/symbolic.hpp"

namespace hayman {

Poly poly_antiderivative(const Poly& p) {
  if (p.is_zero()) return {};
  auto c = p.coefficients();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / Rational(static_cast<long>(k + 1));
  return Poly(std::move(out));
}

ExpIntegralClass exp_integral_form(const RatFunc& f) {
  auto [poly, proper] = split(f);
  const ResidueSpectrum spectrum = residue_spectrum(proper);
  if (!spectrum.all_poles_simple)
    return NotMeromorphic{"pole of order >= 2: e^{int f} has an essential singularity"};
  if (spectrum.nonrational_residues_present)
    return NotMeromorphic{"nonrational residue spectrum: integrality undecidable, treated as non-meromorphic"};

  bool all_integer = true, all_half = true;
  for (const auto& r : spectrum.rational_residues) {
    if (!is_integer(r.residue)) all_integer = false;
    if (!is_integer(2 * r.residue)) all_half = false;
  }

  if (all_integer) {
    RatFunc u(1);
    for (const auto& r : spectrum.rational_residues)
      u *= pow(RatFunc(r.component), static_cast<int>(numer(r.residue).convert_to<long>()));
    if (poly.is_zero()) return RationalU{u};
    return MeromorphicUeV{u, poly_antiderivative(poly)};
  }
  std::ostringstream os;
  if (all_half) {
    os << "half-integer residues:";
    for (const auto& r : spectrum.rational_residues) os << ' ' << to_string(r.residue);
    os << "; e^{2 int f} is meromorphic, e^{int f} is algebroid (two-sheeted)";
    return HalfIntegerAlgebroid{os.str()};
  }
  os << "non-half-integer residues:";
  for (const auto& r : spectrum.rational_residues) os << ' ' << to_string(r.residue);
  return NotMeromorphic{os.str()};
}

std::optional<RatFunc> rational_exp_integral(const RatFunc& f) {
  auto cls = exp_integral_form(f);
  if (auto* r = std::get_if<RationalU>(&cls)) return r->u;
  return std::nullopt;
}

std::string describe(const ExpIntegralClass& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RationalU>) {
          return "rational: " + to_string(v.u);
        } else if constexpr (std::is_same_v<T, MeromorphicUeV>) {
          return "meromorphic: (" + to_string(v.u) + ")*exp(" + to_string(v.v) + ")";
        } else if constexpr (std::is_same_v<T, HalfIntegerAlgebroid>) {
          return "algebroid: " + v.diagnostic;
        } else {
          return "not meromorphic: " + v.diagnostic;
        }
      },
      c);
}

}  // namespace hayman
