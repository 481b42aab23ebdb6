#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "hayman/series.hpp"

namespace hayman {
namespace {

constexpr int kGaussNodes = 20;
constexpr double kMaxPiece = 0.125;

struct GaussLegendre {
  std::array<double, kGaussNodes> x{}, w{};
  GaussLegendre() {
    const int n = kGaussNodes;
    for (int i = 0; i < n; ++i) {
      double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1, p1 = t;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (t * p1 - p0) / (t * t - 1);
        const double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-16) break;
      }
      // ascending order on [0, 1]
      x[static_cast<std::size_t>(n - 1 - i)] = (1 + t) / 2;
      w[static_cast<std::size_t>(n - 1 - i)] = 1 / ((1 - t * t) * dp * dp);
    }
  }
};

const GaussLegendre& gauss() {
  static const GaussLegendre g;
  return g;
}

struct RatJet {
  RatFunc f, df, d2f;
  explicit RatJet(const RatFunc& x) : f(x), df(x.derivative()), d2f(df.derivative()) {}
  [[nodiscard]] std::optional<std::array<cplx, 3>> at(cplx z) const {
    auto a = eval_complex(f, z), b = eval_complex(df, z), c = eval_complex(d2f, z);
    if (!a || !b || !c) return std::nullopt;
    return std::array<cplx, 3>{*a, *b, *c};
  }
};

cplx nearest_root(cplx sq, cplx previous) {
  const cplx r = std::sqrt(sq);
  return std::abs(r - previous) <= std::abs(r + previous) ? r : -r;
}

// Phi with Phi' = rho, rho^2 = rho_sq; rho continued along straight paths from base.
class PathPrimitive {
 public:
  PathPrimitive(const RatFunc& rho_sq, cplx base) : rho_sq_(rho_sq), base_(base) {
    if (auto r = is_square(rho_sq)) {
      rho_ = *r;
      if (auto F = rational_antiderivative(*r)) primitive_ = *F;
    }
    auto v = eval_complex(rho_sq_, base_);
    if (!v || std::abs(*v) < 1e-12) throw std::domain_error("path primitive: base point is singular");
    rho_base_ = rho_ ? *eval_complex(*rho_, base_) : std::sqrt(*v);
  }

  [[nodiscard]] bool exact() const { return primitive_.has_value(); }

  // (rho(z), Phi(z))
  [[nodiscard]] std::optional<std::pair<cplx, cplx>> at(cplx z) const {
    if (primitive_) {
      auto r = eval_complex(*rho_, z);
      auto p = eval_complex(*primitive_, z);
      if (!r || !p) return std::nullopt;
      return std::pair{*r, *p};
    }
    const auto& g = gauss();
    const cplx d = z - base_;
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(d) / kMaxPiece)));
    cplx rho = rho_base_;
    cplx phi = 0;
    for (int p = 0; p < pieces; ++p) {
      const cplx z0 = base_ + d * (static_cast<double>(p) / pieces);
      const cplx h = d / static_cast<double>(pieces);
      cplx sum = 0;
      for (int i = 0; i < kGaussNodes; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        auto r = value(z0 + h * g.x[ui], rho);
        if (!r) return std::nullopt;
        rho = *r;
        sum += g.w[ui] * rho;
      }
      phi += sum * h;
    }
    auto r = value(z, rho);
    if (!r) return std::nullopt;
    return std::pair{*r, phi};
  }

 private:
  [[nodiscard]] std::optional<cplx> value(cplx z, cplx previous) const {
    if (rho_) return eval_complex(*rho_, z);
    auto v = eval_complex(rho_sq_, z);
    if (!v) return std::nullopt;
    return nearest_root(*v, previous);
  }

  RatFunc rho_sq_;
  cplx base_;
  cplx rho_base_;
  std::optional<RatFunc> rho_;
  std::optional<RatFunc> primitive_;
};

// E with E^2 = 1/S, so that E'/E = -A/2.
std::function<std::optional<cplx>(cplx)> inverse_sqrt(const RatFunc& S) {
  if (auto e = is_square(S.reciprocal())) {
    RatFunc E = *e;
    return [E](cplx z) { return eval_complex(E, z); };
  }
  RatFunc inv = S.reciprocal();
  return [inv](cplx z) -> std::optional<cplx> {
    auto v = eval_complex(inv, z);
    if (!v) return std::nullopt;
    return std::sqrt(*v);
  };
}

cplx principal_k(std::optional<cplx> k1, const std::optional<Rational>& k1sq) {
  if (k1) return *k1;
  if (k1sq) return std::sqrt(cplx(to_double(*k1sq), 0));
  return 1;
}

}  // namespace

SolutionFormInstance case1_form(const Case1& d, cplx c1, cplx c2) {
  SolutionFormInstance f;
  f.label = "Case1";
  f.c1 = c1;
  f.c2 = c2;
  f.description = "w = c1^-2 (cosh(c1 z + c2) + 1) alpha";
  auto al = std::make_shared<RatJet>(d.alpha);
  f.eval = [al, c1, c2](cplx z) -> std::optional<Jet> {
    auto a = al->at(z);
    if (!a) return std::nullopt;
    const cplx u = c1 * z + c2;
    const cplx C = std::cosh(u), S = std::sinh(u);
    const cplx g = (C + 1.0) / (c1 * c1), dg = S / c1, d2g = C;
    const auto& [A0, A1, A2] = *a;
    return Jet{g * A0, dg * A0 + g * A1, d2g * A0 + 2.0 * dg * A1 + g * A2};
  };
  return f;
}

SolutionFormInstance case5a_form(const Case5aRational& d, const Coefficients& c, const FormConstants& k,
                                 cplx base) {
  SolutionFormInstance f;
  f.label = "Case5a_Rational";
  f.c1 = k.c1.value_or(0);
  f.k1 = principal_k(k.k1, d.k1sq);
  if (k.k2) {
    f.k2 = *k.k2;
  } else {
    const cplx k1sq = f.k1 * f.k1;
    const cplx k2sq = to_double(d.k2sq.over_k1sq) / k1sq + to_double(d.k2sq.over_k1sq2) / (k1sq * k1sq);
    f.k2 = std::sqrt(k2sq);
  }
  f.description = "w = +-k2 cosh(c1 - k1 Phi) e^{-int A/2} - K e^{2 int a}/(2 k1^2), Phi' = e^{-int a}";
  const double sign = k.sign < 0 ? -1.0 : 1.0;

  auto prim = std::make_shared<PathPrimitive>(d.R.reciprocal(), base);
  auto E = inverse_sqrt(d.S);
  auto A = std::make_shared<RatJet>(d.A);
  auto a = std::make_shared<RatJet>(c.a);
  auto part = std::make_shared<RatJet>(-d.K * d.R / 2);  // times 1/k1^2
  const cplx c1 = f.c1, k1 = f.k1, k2 = f.k2;
  f.eval = [=](cplx z) -> std::optional<Jet> {
    auto rp = prim->at(z);
    auto e = E(z);
    auto Aj = A->at(z);
    auto aj = a->at(z);
    auto pj = part->at(z);
    if (!rp || !e || !Aj || !aj || !pj) return std::nullopt;
    const auto [rho, phi] = *rp;
    const cplx drho = -(*aj)[0] * rho;
    const cplx g = c1 - k1 * phi, dg = -k1 * rho, d2g = -k1 * drho;
    const cplx C = std::cosh(g), S = std::sinh(g);
    const cplx dC = S * dg, d2C = C * dg * dg + S * d2g;
    const cplx Ah = (*Aj)[0] / 2.0, dAh = (*Aj)[1] / 2.0;
    const cplx dE = -Ah * *e, d2E = (-dAh + Ah * Ah) * *e;
    const cplx s = sign * k2;
    const cplx inv = 1.0 / (k1 * k1);
    return Jet{s * C * *e + inv * (*pj)[0], s * (dC * *e + C * dE) + inv * (*pj)[1],
               s * (d2C * *e + 2.0 * dC * dE + C * d2E) + inv * (*pj)[2]};
  };
  return f;
}

std::optional<SolutionFormInstance> case5b_form(const Case5b& d, const Coefficients& c, const FormConstants& k,
                                                cplx base) {
  if (!d.ea) return std::nullopt;
  SolutionFormInstance f;
  f.label = "Case5b";
  f.c1 = k.c1.value_or(0);
  f.k1 = principal_k(k.k1, d.k1sq);
  f.k2 = 0;
  f.description = "w = e^{c1} e^{int g} - K e^{2 int a}/(2 k1^2), g = -A/2 + k1 e^{-int a}";
  auto prim = std::make_shared<PathPrimitive>(d.ea->reciprocal() * d.ea->reciprocal(), base);
  auto E = inverse_sqrt(d.S);
  auto A = std::make_shared<RatJet>(d.A);
  auto a = std::make_shared<RatJet>(c.a);
  auto part = std::make_shared<RatJet>(-d.K * d.R / 2);
  const cplx c1 = f.c1, k1 = f.k1;
  f.eval = [=](cplx z) -> std::optional<Jet> {
    auto rp = prim->at(z);
    auto e = E(z);
    auto Aj = A->at(z);
    auto aj = a->at(z);
    auto pj = part->at(z);
    if (!rp || !e || !Aj || !aj || !pj) return std::nullopt;
    const auto [rho, phi] = *rp;
    const cplx g = -(*Aj)[0] / 2.0 + k1 * rho;
    const cplx dg = -(*Aj)[1] / 2.0 - k1 * (*aj)[0] * rho;
    const cplx F = std::exp(c1 + k1 * phi) * *e;
    const cplx inv = 1.0 / (k1 * k1);
    return Jet{F + inv * (*pj)[0], g * F + inv * (*pj)[1], (dg + g * g) * F + inv * (*pj)[2]};
  };
  return f;
}

std::optional<SolutionFormInstance> default_form(const Branch& br, const Coefficients& c, const FormConstants& k,
                                                 cplx base) {
  if (auto* d = std::get_if<Case1>(&br.data)) return case1_form(*d, k.c1.value_or(1), k.c2.value_or(0));
  if (auto* d = std::get_if<Case5aRational>(&br.data)) return case5a_form(*d, c, k, base);
  if (auto* d = std::get_if<Case5b>(&br.data)) return case5b_form(*d, c, k, base);
  return std::nullopt;
}

SolutionFormInstance series_form(const ComplexSeries& s, std::string label) {
  SolutionFormInstance f;
  f.label = std::move(label);
  f.description = "truncated power series";
  f.eval = [s](cplx z) -> std::optional<Jet> { return Jet{s(z), s.derivative(z, 1), s.derivative(z, 2)}; };
  return f;
}

SolutionFormInstance custom_form(std::string label, std::function<std::optional<Jet>(cplx)> eval) {
  SolutionFormInstance f;
  f.label = std::move(label);
  f.eval = std::move(eval);
  return f;
}

ResidualResult residual_check(const Coefficients& c, const SolutionFormInstance& form, const Grid& grid) {
  const auto singular = singular_points(c);
  ResidualResult res;
  for (int i = 0; i < grid.radii; ++i) {
    const double r = grid.radii == 1 ? grid.r_min
                                     : grid.r_min + (grid.r_max - grid.r_min) * i / (grid.radii - 1.0);
    for (int j = 0; j < grid.angles; ++j) {
      const double th = 2 * std::numbers::pi * (j + 0.5) / grid.angles;
      const cplx z = grid.center + std::polar(r, th);
      bool near = false;
      for (const cplx& s : singular) near = near || std::abs(z - s) < grid.exclusion;
      auto a = eval_complex(c.a, z), b = eval_complex(c.b, z), al = eval_complex(c.alpha, z);
      auto be = eval_complex(c.beta, z), ga = eval_complex(c.gamma, z);
      std::optional<Jet> w = near ? std::nullopt : form(z);
      if (near || !a || !b || !al || !be || !ga || !w || !std::isfinite(std::abs(w->w)) ||
          std::abs(w->w) < 1e-12) {
        ++res.excluded;
        continue;
      }
      const cplx lhs = w->d2w * w->w - w->dw * w->dw + *a * w->dw * w->w + *b * w->w * w->w;
      const cplx rhs = *al * w->w + *be * w->dw + *ga;
      const double rel = std::abs(lhs - rhs) / (1 + std::norm(w->w));
      ++res.used;
      if (rel > res.max_residual || res.used == 1) {
        res.max_residual = std::max(res.max_residual, rel);
        if (rel >= res.max_residual) res.worst_point = z;
      }
    }
  }
  if (res.used == 0) throw std::runtime_error("residual_check: every grid point was excluded");
  return res;
}

double compare(const ComplexSeries& s, const SolutionFormInstance& form, double radius) {
  double worst = 0;
  auto check = [&](cplx z) {
    auto f = form(z);
    if (!f) return;
    worst = std::max(worst, std::abs(s(z) - f->w) / (1 + std::abs(f->w)));
  };
  check(s.base);
  for (int i = 1; i <= 4; ++i)
    for (int j = 0; j < 16; ++j) check(s.base + std::polar(radius * i / 4.0, 2 * std::numbers::pi * (j + 0.25) / 16));
  return worst;
}

}  // namespace hayman
