#include <algorithm>
#include <stdexcept>

#include "hayman/classifier.hpp"

namespace hayman {

Coefficients Coefficients::shift(const Rational& s) const {
  return {a.shift(s), b.shift(s), alpha.shift(s), beta.shift(s), gamma.shift(s)};
}

Coefficients normalize_hayman(const RatFunc& tau1, const RatFunc& tau2, const RatFunc& kappa0,
                              const RatFunc& kappa1, const RatFunc& kappa2, const RatFunc& kappa3) {
  const RatFunc k1 = kappa3.derivative();
  const RatFunc k2 = k1.derivative();
  Coefficients c;
  c.a = tau1;
  c.b = tau2;
  c.alpha = kappa1 - 2 * tau2 * kappa3 - tau1 * k1 - k2;
  c.beta = kappa2 - tau1 * kappa3 + 2 * k1;
  c.gamma = kappa0 + kappa1 * kappa3 + kappa2 * k1 + kappa3 * k2 - tau2 * kappa3 * kappa3 -
            tau1 * kappa3 * k1 + k1 * k1 - kappa3 * k2;
  return c;
}

DerivedData derived_AB(const Coefficients& c) {
  DerivedData d;
  d.B = 2 * c.alpha + c.beta.derivative() + c.a * c.beta;
  if (c.gamma.is_zero()) {
    d.diagnostic = "gamma = 0: A undefined";
    return d;
  }
  const RatFunc A = (c.beta * (c.alpha + c.beta.derivative()) - c.gamma.derivative() -
                     c.a * (2 * c.gamma - c.beta * c.beta)) /
                    c.gamma;
  d.A = A;
  d.case5_test = A.derivative() + c.a * A - 2 * c.b;
  d.K = c.beta * A / 2 - d.B;
  d.Q = c.beta * c.beta / 4 - c.gamma;
  d.E0 = d.B.derivative() + 2 * c.a * d.B + A * c.alpha - c.beta * c.b;
  return d;
}

LocalExpansion local_expansion_data(const Coefficients& c, const Rational& z0) {
  auto value = [&](const RatFunc& f, const char* name) -> Rational {
    auto v = f(z0);
    if (f.is_zero()) return Rational(0);
    if (!v || *v == 0)
      throw std::domain_error(std::string("local_expansion_data: z0 is a zero or pole of ") + name);
    return *v;
  };
  const Rational a = value(c.a, "a");
  value(c.b, "b");
  const Rational al = value(c.alpha, "alpha");
  const Rational be = value(c.beta, "beta");
  const Rational ga = value(c.gamma, "gamma");
  const Rational dbe = c.beta.is_zero() ? Rational(0) : *c.beta.derivative()(z0);

  LocalExpansion out;
  if (c.beta.is_zero() && c.gamma.is_zero()) {
    out.p = 2;
    // -2 a0^2 = alpha(z0) a0
    if (al != 0) out.a0.push_back(-al / 2);
    return out;
  }
  out.p = 1;
  const Rational disc = be * be - 4 * ga;
  if (auto s = rational_sqrt(disc)) {
    for (const Rational& r : {(-be + *s) / 2, (-be - *s) / 2}) {
      if (r == 0) continue;
      if (std::find(out.a0.begin(), out.a0.end(), r) == out.a0.end()) out.a0.push_back(r);
    }
  } else {
    out.a0_irrational = true;
  }
  if (!c.gamma.is_zero()) {
    const Rational dga = *c.gamma.derivative()(z0);
    out.delta1 = (dga + a * (ga - be * be) - be * (al + dbe)) / (2 * ga);
    out.delta2 = (al + dbe + a * be) / 2;
    for (const Rational& r : out.a0) out.a1.push_back(*out.delta1 * r - *out.delta2);
  }
  return out;
}

ConsistencyReport consistency_reduce(const RatFunc& p, const RatFunc& q, const Coefficients& c) {
  // w'' = (p' + p^2) w + q' + p q
  ConsistencyReport r;
  r.c2 = p.derivative() + c.a * p + c.b;
  r.c1 = q.derivative() - p * q + c.a * q - c.alpha - c.beta * p;
  r.c0 = -q * q - c.beta * q - c.gamma;
  if (r.c2.is_zero() && r.c1.is_zero() && r.c0.is_zero()) {
    r.status = ConsistencyReport::Status::Consistent;
    return r;
  }
  auto add = [&](const RatFunc& w) {
    if (std::find(r.forced.begin(), r.forced.end(), w) == r.forced.end()) r.forced.push_back(w);
  };
  if (!r.c2.is_zero()) {
    if (auto s = is_square(r.c1 * r.c1 - 4 * r.c2 * r.c0)) {
      add((-r.c1 + *s) / (2 * r.c2));
      add((-r.c1 - *s) / (2 * r.c2));
    }
  } else if (!r.c1.is_zero()) {
    add(-r.c0 / r.c1);
  }
  r.status = r.forced.empty() ? ConsistencyReport::Status::Inconsistent
                              : ConsistencyReport::Status::ForcedRational;
  return r;
}

std::string to_string(ConsistencyReport::Status s) {
  switch (s) {
    case ConsistencyReport::Status::Consistent: return "Consistent";
    case ConsistencyReport::Status::ForcedRational: return "ForcedRational";
    case ConsistencyReport::Status::Inconsistent: return "Inconsistent";
  }
  return "?";
}

}  // namespace hayman
