#include <stdexcept>

#include "hayman/algebra.hpp"

namespace hayman {

SquarefreeDecomp squarefree_decomposition(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition of the zero polynomial");
  SquarefreeDecomp out{{}, p.leading()};
  if (p.degree() == 0) return out;

  Poly f = p.monic();
  Poly df = f.derivative();
  Poly a = gcd(f, df);
  Poly b = exact_div(f, a);
  Poly c = exact_div(df, a);
  Poly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly g = gcd(b, d);
    if (g.degree() > 0) out.factors.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return Poly(Rational(1));
  Poly out(Rational(1));
  for (const auto& f : squarefree_decomposition(p).factors) out *= f.factor;
  return out;
}

}  // namespace hayman
