#include "hayman/symbolic.hpp"

namespace hayman {
namespace {

// sqrt of a monic polynomial whose squarefree multiplicities are all even
std::optional<Poly> monic_sqrt(const Poly& p) {
  if (p.degree() <= 0) return Poly(Rational(1));
  Poly root(Rational(1));
  for (const auto& [factor, mult] : squarefree_decomposition(p).factors) {
    if (mult % 2 != 0) return std::nullopt;
    root *= pow(factor, static_cast<unsigned>(mult / 2));
  }
  return root;
}

}  // namespace

std::optional<RatFunc> is_square(const RatFunc& f) {
  if (f.is_zero()) return RatFunc();
  const Rational unit = f.numer().leading();
  auto su = rational_sqrt(unit);
  if (!su) return std::nullopt;
  auto sn = monic_sqrt(f.numer().monic());
  if (!sn) return std::nullopt;
  auto sd = monic_sqrt(f.denom());
  if (!sd) return std::nullopt;
  return RatFunc::make(*sn * *su, *sd);
}

std::optional<Rational> constant_value(const RatFunc& f) {
  if (!f.is_polynomial() || f.numer().degree() > 0) return std::nullopt;
  return f.numer().coeff(0);
}

ConstancySolution solve_scalar_for_constancy(const RatFunc& P, const RatFunc& Q) {
  // P + cQ constant  <=>  P' + c Q' = 0
  const RatFunc dP = P.derivative();
  const RatFunc dQ = Q.derivative();
  if (dQ.is_zero()) {
    if (dP.is_zero()) return {ConstancySolution::Kind::All, Rational(0)};
    return {};
  }
  auto c = constant_value(-dP / dQ);
  if (!c) return {};
  return {ConstancySolution::Kind::Unique, *c};
}

std::optional<RatFunc> rational_antiderivative(const RatFunc& f) {
  auto [poly, proper] = split(f);
  RatFunc out(poly_antiderivative(poly));
  if (proper.is_zero()) return out;
  auto fam = rational_solutions_linear_ode(RatFunc(), proper);
  if (fam.empty()) return std::nullopt;
  out += split(*fam.particular).proper_part;
  if (out.derivative() != f) return std::nullopt;
  return out;
}

}  // namespace hayman
