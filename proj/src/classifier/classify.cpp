#include <algorithm>

#include "hayman/classifier.hpp"

namespace hayman {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool zero(const RatFunc& f) { return f.is_zero(); }

std::optional<RatFunc> rational_u(const RatFunc& f) {
  auto cls = exp_integral_form(f);
  if (auto* r = std::get_if<RationalU>(&cls)) return r->u;
  return std::nullopt;
}

// w' = p w + q with p free of a polynomial part has no transcendental meromorphic solution.
void flag_vacuous(Branch& br, const RatFunc& p) {
  if (split(p).poly_part.is_zero())
    br.warnings.push_back("vacuous: the reduced equation w' = p w + q with p = " + to_string(p) +
                          " admits no transcendental meromorphic solution");
}

void flag_consistency(Branch& br) {
  if (!br.consistency || br.consistency->status == ConsistencyReport::Status::Consistent) return;
  br.warnings.push_back("substituting the reduction leaves " + to_string(br.consistency->status) +
                        " residue (" + to_string(br.consistency->c2) + ") w^2 + (" +
                        to_string(br.consistency->c1) + ") w + (" + to_string(br.consistency->c0) + ")");
}

struct K1Options {
  bool any = false;
  std::optional<Rational> fixed;
};

void case5ab(const Coefficients& c, const DerivedData& d, std::vector<Branch>& out) {
  const RatFunc& A = *d.A;
  const auto two_a = exp_integral_form(2 * c.a);

  if (auto* tr = std::get_if<MeromorphicUeV>(&two_a)) {
    if (!zero(c.alpha) || !zero(c.beta)) return;
    const RatFunc lg = c.gamma.derivative() / c.gamma;
    const RatFunc cond = 2 * (c.a.derivative() + c.a * c.a + c.b) + lg.derivative() + c.a * lg;
    if (!zero(cond)) return;
    Branch br{Case5aTranscendental{*tr, A},
              {"A' + aA - 2b = 0", "alpha = beta = 0",
               "2(a' + a^2 + b) + (gamma'/gamma)' + a gamma'/gamma = 0",
               "e^{2 int a} = " + to_string(tr->u) + " e^{" + to_string(tr->v) + "}"},
              std::nullopt,
              {}};
    out.push_back(std::move(br));
    return;
  }
  auto* rat = std::get_if<RationalU>(&two_a);
  if (!rat) return;

  std::optional<RatFunc> ea = rational_u(c.a);
  const RatFunc R = ea ? *ea * *ea : rat->u;

  // B' + 2aB + A alpha + beta (k1^2 / R - A^2/4 - b) = 0
  const RatFunc P = d.B.derivative() + 2 * c.a * d.B + A * c.alpha - c.beta * (A * A / 4 + c.b);
  std::optional<Rational> k1sq;
  std::string k1_identity;
  if (zero(c.beta)) {
    if (!zero(P)) return;
    k1_identity = "B' + 2aB + A alpha = 0 (k1^2 free)";
  } else {
    auto k = constant_value(-P * R / c.beta);
    if (!k || *k == 0) return;
    k1sq = *k;
    k1_identity = "B' + 2aB + A alpha + beta(k1^2/R - A^2/4 - b) = 0 at k1^2 = " + to_string(*k);
  }

  const RatFunc Y0 = -d.Q;             // gamma - beta^2/4
  const RatFunc X0 = d.K * d.K * R / 4;  // k2^2 k1^4 / e^{int(A+2a)} = X0 + k1^2 Y0

  // (b): X0 + k1^2 Y0 = 0
  std::optional<std::optional<Rational>> b_k1sq;  // outer: match, inner: absent = free
  if (k1sq) {
    if (zero(X0 + RatFunc(*k1sq) * Y0)) b_k1sq = k1sq;
  } else if (zero(Y0)) {
    if (zero(X0)) b_k1sq = std::optional<Rational>{};
  } else if (auto k = constant_value(-X0 / Y0); k && *k != 0) {
    b_k1sq = k;
  }
  if (b_k1sq) {
    auto T = rational_u(A + 2 * c.a);
    Branch br{Case5b{*b_k1sq, R, T ? *T / R : RatFunc(1), A, d.K, ea},
              {"A' + aA - 2b = 0", k1_identity, "K^2 e^{2 int a} / (4 k1^2) + gamma - beta^2/4 = 0"},
              std::nullopt,
              {}};
    if (!ea) br.warnings.push_back("e^{int a} is not rational; closed form not available");
    out.push_back(std::move(br));
  }

  // (a): k2^2 = (Y0 + X0 / k1^2) T / k1^2 a nonzero constant
  auto T = rational_u(A + 2 * c.a);
  if (!T) return;
  const RatFunc S = *T / R;
  const RatFunc Y = Y0 * *T;
  const RatFunc X = X0 * *T;
  std::optional<K2Square> k2;
  std::optional<Rational> a_k1sq = k1sq;
  if (k1sq) {
    auto v = constant_value(Y / *k1sq + X / (*k1sq * *k1sq));
    if (!v || *v == 0) return;
    auto y = constant_value(Y), x = constant_value(X);
    if (y && x)
      k2 = K2Square{*y, *x};
    else
      k2 = K2Square{*v * *k1sq, Rational(0)};
  } else {
    auto sol = solve_scalar_for_constancy(Y, X);  // in 1/k1^2
    if (sol.kind == ConstancySolution::Kind::None) return;
    if (sol.kind == ConstancySolution::Kind::All) {
      const Rational y = *constant_value(Y), x = *constant_value(X);
      if (y == 0 && x == 0) return;
      k2 = K2Square{y, x};
    } else {
      if (sol.value == 0) return;
      a_k1sq = 1 / sol.value;
      auto v = constant_value(Y * sol.value + X * sol.value * sol.value);
      if (!v || *v == 0) return;
      k2 = K2Square{*v * *a_k1sq, Rational(0)};
    }
  }
  Branch br{Case5aRational{a_k1sq, *k2, R, S, A, d.K},
            {"A' + aA - 2b = 0", k1_identity, "e^{2 int a} = " + to_string(R),
             "e^{int A} = " + to_string(S),
             "k2^2 = " + to_string(k2->over_k1sq) + "/k1^2 + " + to_string(k2->over_k1sq2) + "/k1^4"},
            std::nullopt,
            {}};
  if (!ea) br.warnings.push_back("e^{int a}: " + describe(exp_integral_form(c.a)));
  if (!a_k1sq && k2->over_k1sq != 0)
    br.warnings.push_back("k2 = 0 at k1^2 = " + to_string(-k2->over_k1sq2 / k2->over_k1sq) +
                          "; that value belongs to Case5b");
  out.push_back(std::move(br));
}

}  // namespace

Rational K2Square::at(const Rational& k1sq) const {
  return over_k1sq / k1sq + over_k1sq2 / (k1sq * k1sq);
}

std::string label(const BranchData& b) {
  return std::visit(overloaded{
                        [](const HomogeneousSpecial&) { return std::string("HomogeneousSpecial"); },
                        [](const Case1&) { return std::string("Case1"); },
                        [](const Case2&) { return std::string("Case2"); },
                        [](const Case3&) { return std::string("Case3"); },
                        [](const Case4&) { return std::string("Case4"); },
                        [](const Case5aRational&) { return std::string("Case5a_Rational"); },
                        [](const Case5aTranscendental&) { return std::string("Case5a_Transcendental"); },
                        [](const Case5b&) { return std::string("Case5b"); },
                        [](const Case5c&) { return std::string("Case5c"); },
                        [](const Case5d&) { return std::string("Case5d"); },
                        [](const Case5e&) { return std::string("Case5e"); },
                        [](const NoBranch&) { return std::string("NoBranch"); },
                    },
                    b);
}

bool Classification::has(const std::string& branch_label) const {
  return std::any_of(branches.begin(), branches.end(),
                     [&](const Branch& b) { return label(b) == branch_label; });
}

Case4Result case4_solve(const Coefficients& c, const DerivedData& d) {
  Case4Result res;
  if (!d.A) return res;
  const RatFunc disc = c.beta * c.beta - 4 * c.gamma;
  auto s = is_square(disc);
  if (!s) {
    res.diagnostic = "quadratic extension required: beta^2 - 4 gamma = " + to_string(disc) +
                     " is not a square";
    return res;
  }
  std::vector<RatFunc> h2s{(-c.beta + *s) / 2};
  if (!zero(*s)) h2s.push_back((-c.beta - *s) / 2);
  for (const RatFunc& h2 : h2s) {
    const RatFunc den = h2 + c.beta;
    if (zero(den)) continue;
    const RatFunc h1 = (h2.derivative() + c.a * h2 - c.alpha) / den;
    if (!zero(h1.derivative() + c.a * h1 + c.b)) continue;
    res.pairs.emplace_back(h1, h2);
  }
  if (res.pairs.empty()) res.diagnostic = "no candidate h2 yields h1' + a h1 + b = 0";
  return res;
}

std::vector<Branch> case5_dispatch(const Coefficients& c, const DerivedData& d) {
  std::vector<Branch> out;
  if (!d.A) return out;
  const RatFunc& A = *d.A;
  const std::string base = "A' + aA - 2b = 0";

  // (e)
  if (zero(d.Q)) {
    Branch br{Case5e{A, c.beta}, {base, "beta^2/4 - gamma = 0"}, std::nullopt, {}};
    br.consistency = consistency_reduce(-A / 2, -c.beta / 2, c);
    flag_consistency(br);
    flag_vacuous(br, -A / 2);
    out.push_back(std::move(br));
  }

  // (c)
  if (!zero(d.K) && zero(d.K.derivative() / d.K + A / 2 + 2 * c.a)) {
    Case5c data{std::nullopt, d.K, d.Q, rational_u(A / 2 + 2 * c.a)};
    if (data.u) data.k1 = constant_value(d.K * *data.u);
    Branch br{data, {base, "(beta A/2 - B)'/(beta A/2 - B) + A/2 + 2a = 0"}, std::nullopt, {}};
    if (!data.u) br.warnings.push_back("e^{int (A/2 + 2a)} is not rational; k1 left symbolic");
    if (split(c.a).poly_part.is_zero())
      br.warnings.push_back("vacuous: h' = a h + k1 has no transcendental meromorphic solution");
    out.push_back(std::move(br));
  }

  // (d)
  if (!zero(d.Q) && zero(d.Q.derivative() / d.Q + A + 2 * c.a)) {
    if (auto v = rational_u(A / 2 + c.a)) {
      const Rational k1sq = *constant_value(d.Q * *v * *v);
      Case5d data{k1sq, A, c.beta, *v, zero(c.a.derivative() + c.a * c.a + c.b) && zero(A + 2 * c.a)};
      Branch br{data,
                {base, "(beta^2/4 - gamma)'/(beta^2/4 - gamma) + A + 2a = 0",
                 "e^{int (A/2 + a)} = " + to_string(*v)},
                std::nullopt,
                {}};
      if (auto k1 = rational_sqrt(k1sq)) {
        br.consistency = consistency_reduce(-A / 2, -c.beta / 2 + RatFunc(*k1) / *v, c);
        flag_consistency(br);
      } else {
        br.warnings.push_back("k1 = sqrt(" + to_string(k1sq) + ") is irrational; consistency not checked");
      }
      flag_vacuous(br, -A / 2);
      out.push_back(std::move(br));
    }
  }

  case5ab(c, d, out);

  if (out.empty()) out.push_back(Branch{NoBranch{"A' + aA - 2b = 0 but none of Case5a to Case5e applies"}, {base}, std::nullopt, {}});
  return out;
}

Classification classify(const Coefficients& c, const LinearOdeBounds& bounds) {
  Classification cl{c, derived_AB(c), {}};
  auto& out = cl.branches;

  if (zero(c.alpha) && zero(c.beta) && zero(c.gamma)) {
    Branch br{HomogeneousSpecial{rational_solutions_linear_ode(-c.a, -c.b, bounds)},
              {"alpha = beta = gamma = 0"},
              std::nullopt,
              {}};
    if (!std::get<HomogeneousSpecial>(br.data).h.complete) br.warnings.push_back(std::get<HomogeneousSpecial>(br.data).h.diagnostic);
    out.push_back(std::move(br));
    return cl;
  }

  // Case1
  if (zero(c.beta) && zero(c.gamma) && !zero(c.alpha) && zero(c.a)) {
    const RatFunc la = c.alpha.derivative() / c.alpha;
    if (zero(la.derivative() + c.b))
      out.push_back(Branch{Case1{c.alpha}, {"beta = gamma = 0", "a = 0", "(alpha'/alpha)' + b = 0"}, std::nullopt, {}});
  }

  // Case2
  if (zero(c.gamma) && !zero(c.beta)) {
    const RatFunc h = -c.alpha / c.beta;
    if (zero(h.derivative() + c.a * h + c.b)) {
      Branch br{Case2{h}, {"gamma = 0", "h = -alpha/beta", "h' + a h + b = 0"}, std::nullopt, {}};
      br.consistency = consistency_reduce(-h, RatFunc(), c);
      flag_consistency(br);
      flag_vacuous(br, -h);
      out.push_back(std::move(br));
    }
  }

  // Case3
  if (zero(c.gamma) && zero(c.alpha + c.beta.derivative() + c.a * c.beta)) {
    Case3 data{rational_solutions_linear_ode(-c.a, -c.b, bounds)};
    Branch br{data, {"gamma = 0", "alpha + beta' + a beta = 0"}, std::nullopt, {}};
    if (!data.h.empty()) br.consistency = consistency_reduce(*data.h.particular, -c.beta, c);
    if (!data.h.complete) br.warnings.push_back(data.h.diagnostic);
    flag_consistency(br);
    out.push_back(std::move(br));
  }

  if (!zero(c.gamma)) {
    const DerivedData& d = cl.derived;
    if (!zero(d.case5_test)) {
      auto r = case4_solve(c, d);
      for (const auto& [h1, h2] : r.pairs) {
        Branch br{Case4{h1, h2, h1 * h1 + *d.A * h1},
                  {"h1' + a h1 + b = 0", "h2^2 + beta h2 + gamma = 0",
                   "h2' = (h1 - a) h2 + alpha + beta h1"},
                  std::nullopt,
                  {}};
        br.consistency = consistency_reduce(h1, h2, c);
        flag_consistency(br);
        flag_vacuous(br, h1);
        out.push_back(std::move(br));
      }
      if (r.pairs.empty()) out.push_back(Branch{NoBranch{"A' + aA - 2b != 0 and " + r.diagnostic}, {}, std::nullopt, {}});
    } else {
      for (auto& br : case5_dispatch(c, d)) out.push_back(std::move(br));
    }
  }

  if (out.empty())
    out.push_back(Branch{NoBranch{"gamma = 0 and none of Case1, Case2, Case3 applies"}, {}, std::nullopt, {}});
  for (auto& br : out)
    if (std::holds_alternative<NoBranch>(br.data))
      br.warnings.push_back("no transcendental meromorphic solution exists by the classification");
  return cl;
}

}  // namespace hayman
