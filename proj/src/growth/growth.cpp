#include <algorithm>
#include <sstream>

#include "hayman/growth.hpp"

namespace hayman {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

GrowthReport finite(const Rational& order, std::string provenance) {
  GrowthReport g;
  g.kind = GrowthReport::Kind::FiniteOrder;
  g.order = order;
  g.exact = true;
  g.provenance = std::move(provenance);
  return g;
}

GrowthReport unknown(std::string diagnostic, std::string provenance) {
  GrowthReport g;
  g.provenance = std::move(provenance);
  g.diagnostic = std::move(diagnostic);
  return g;
}

GrowthReport from_linear(const RatFunc& f, const std::string& provenance) {
  auto lg = linear_ode_growth(f);
  if (!lg.order) return unknown(lg.diagnostic, provenance);
  if (*lg.order == 0)
    return unknown("the reduced linear equation y' = (" + to_string(f) +
                       ") y + ... has no transcendental meromorphic solution",
                   provenance);
  return finite(Rational(*lg.order), provenance);
}

int poly_degree(const RatFunc& f) {
  const Poly p = split(f).poly_part;
  return p.is_zero() ? -1 : p.degree();
}

GrowthReport case3_growth(const Coefficients& c, const RationalSolutionFamily& h, const LinearOdeBounds& bounds) {
  const Poly p = split(c.a).poly_part;
  if (!p.is_zero()) {
    GrowthReport g;
    g.kind = GrowthReport::Kind::HyperOrderBound;
    g.n = p.degree() + 1;
    g.provenance = "hyper-order <= deg p + 1, p the polynomial part of a";
    return g;
  }
  const std::string prov = "order m1 + 1, m1 the degree at infinity of the rational h";
  RationalSolutionFamily fam = h;
  if (fam.empty() && fam.complete) fam = rational_solutions_linear_ode(-c.a, -c.b, bounds);
  if (!fam.complete) return unknown("rational h search incomplete: " + fam.diagnostic, prov);
  if (fam.empty()) return unknown("no rational h with h' + a h + b = 0", prov);
  // generic member of particular + c * homogeneous
  int m1 = kNegInfDegree;
  if (!fam.particular->is_zero()) m1 = degree_at_infinity(*fam.particular).degree;
  if (fam.homogeneous) m1 = std::max(m1, degree_at_infinity(*fam.homogeneous).degree);
  if (m1 == kNegInfDegree || m1 < 0)
    return unknown("h tends to 0 at infinity; w' = h w - beta has no transcendental meromorphic solution", prov);
  GrowthReport g = finite(Rational(m1 + 1), prov);
  if (fam.homogeneous) g.notes.push_back("h = " + to_string(*fam.particular) + " + c*(" + to_string(*fam.homogeneous) + "), generic c");
  return g;
}

}  // namespace

std::string to_string(GrowthReport::Kind k) {
  switch (k) {
    case GrowthReport::Kind::FiniteOrder: return "FiniteOrder";
    case GrowthReport::Kind::HyperOrderExact: return "HyperOrderExact";
    case GrowthReport::Kind::HyperOrderBound: return "HyperOrderBound";
    case GrowthReport::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(const GrowthReport& g) {
  std::ostringstream os;
  switch (g.kind) {
    case GrowthReport::Kind::FiniteOrder: os << "order " << to_string(g.order) << (g.exact ? "" : " (bound)"); break;
    case GrowthReport::Kind::HyperOrderExact: os << "hyper-order " << g.n; break;
    case GrowthReport::Kind::HyperOrderBound: os << "hyper-order <= " << g.n; break;
    case GrowthReport::Kind::Unknown: os << "unknown: " << g.diagnostic; break;
  }
  return os.str();
}

LinearGrowth linear_ode_growth(const RatFunc& f) {
  const Poly p = split(f).poly_part;
  if (!p.is_zero()) return {p.degree() + 1, ""};
  auto cls = exp_integral_form(f);
  if (std::holds_alternative<RationalU>(cls)) return {0, ""};
  return {std::nullopt, "solutions are not meromorphic: " + describe(cls)};
}

GrowthReport growth_report(const Branch& br, const Coefficients& c, const LinearOdeBounds& bounds) {
  return std::visit(
      overloaded{
          [&](const HomogeneousSpecial& d) { return case3_growth(c, d.h, bounds); },
          [&](const Case1&) { return finite(Rational(1), "cosh form, order 1"); },
          [&](const Case2& d) { return from_linear(-d.h, "w' = -h w"); },
          [&](const Case3& d) { return case3_growth(c, d.h, bounds); },
          [&](const Case4& d) { return from_linear(d.h1, "w' = h1 w + h2"); },
          [&](const Case5aRational& d) {
            const std::string prov = "order (m3 + 2)/2, m3 the degree at infinity of k1^2 e^{-2 int a}";
            const int m3 = -degree_at_infinity(d.R).degree;
            if (m3 < -1) return unknown("m3 = " + std::to_string(m3) + " < -1: z u1(z) -> 0", prov);
            GrowthReport g = finite(Rational(m3 + 2, 2), prov);
            g.notes.push_back("m3 = " + std::to_string(m3));
            return g;
          },
          [&](const Case5aTranscendental& d) {
            GrowthReport g;
            g.kind = GrowthReport::Kind::HyperOrderExact;
            g.n = d.R.v.degree();
            g.provenance = "hyper-order m4 = deg v, e^{2 int a} = u e^v";
            return g;
          },
          [&](const Case5b& d) {
            const std::string prov = "w + K R/(2 k1^2) = e^{int g}, g = -A/2 + k1 e^{-int a}";
            if (!d.ea) return unknown("e^{int a} is not rational", prov);
            int deg = std::max(poly_degree(d.A), poly_degree(1 / *d.ea));
            std::optional<Rational> k1 = d.k1sq ? rational_sqrt(*d.k1sq) : std::nullopt;
            if (k1)
              deg = std::max(poly_degree(-d.A / 2 + RatFunc(*k1) / *d.ea), poly_degree(-d.A / 2 - RatFunc(*k1) / *d.ea));
            if (deg < 0) return unknown("g has no polynomial part; e^{int g} is not transcendental meromorphic", prov);
            GrowthReport g = finite(Rational(deg + 1), prov);
            if (d.k1sq && !k1) g.notes.push_back("k1 irrational: leading terms of A/2 and k1/e^{int a} cannot cancel");
            if (!d.k1sq) g.notes.push_back("generic k1");
            return g;
          },
          [&](const Case5c&) { return from_linear(c.a, "generator h' = a h + k1"); },
          [&](const Case5d& d) { return from_linear(-d.A / 2, "w' + (A w + beta)/2 = k1 e^{-int(A/2 + a)}"); },
          [&](const Case5e& d) { return from_linear(-d.A / 2, "w' + (A w + beta)/2 = 0"); },
          [&](const NoBranch& d) { return unknown("no branch: " + d.reason, "classification"); },
      },
      br.data);
}

GrowthReport growth_report(const Classification& cl, const Coefficients& c, const LinearOdeBounds& bounds) {
  return growth_report(cl.primary(), c, bounds);
}

InfiniteOrderScenarios infinite_order_scenarios(const Coefficients& c) {
  InfiniteOrderScenarios s;
  s.a_not_to_zero = !c.a.is_zero() && degree_at_infinity(c.a).degree >= 0;
  s.gamma_zero = c.gamma.is_zero();
  s.alpha_beta_identity = (c.alpha + c.beta.derivative() + c.a * c.beta).is_zero();
  s.alpha_beta_zero = c.alpha.is_zero() && c.beta.is_zero();
  if (!s.gamma_zero) {
    const RatFunc lg = c.gamma.derivative() / c.gamma;
    s.gamma_identity = (2 * (c.a.derivative() + c.a * c.a + c.b) + lg.derivative() + c.a * lg).is_zero();
  }
  return s;
}

}  // namespace hayman
