#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hayman/series.hpp"

namespace hayman {
namespace {

constexpr double kTieTolerance = 1e-12;

int argmax_log(const std::vector<double>& logs) {
  int best = -1;
  double top = -INFINITY;
  for (std::size_t n = 0; n < logs.size(); ++n) {
    if (!std::isfinite(logs[n])) continue;
    if (best < 0 || logs[n] >= top - kTieTolerance * std::max(1.0, std::abs(top))) {
      best = static_cast<int>(n);
      top = std::max(top, logs[n]);
    }
  }
  return best;
}

std::pair<double, double> slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0) throw std::invalid_argument("order estimate: need two distinct radii");
  const double m = (n * sxy - sx * sy) / den;
  return {m, (sy - m * sx) / n};
}

OrderEstimate fit(std::vector<std::pair<double, int>> samples) {
  OrderEstimate e;
  std::vector<double> x, y, yy;
  bool hyper = true;
  for (auto [r, nu] : samples) {
    if (nu < 1) throw std::runtime_error("order estimate: central index 0 at r = " + std::to_string(r));
    x.push_back(std::log(r));
    y.push_back(std::log(nu));
    if (nu > 1) yy.push_back(std::log(std::log(static_cast<double>(nu))));
    else hyper = false;
  }
  e.sigma = slope(x, y).first;
  if (hyper) e.hyper = slope(x, yy).first;
  e.samples = std::move(samples);
  return e;
}

}  // namespace

int central_index(const ComplexSeries& s, double r) {
  std::vector<double> logs;
  logs.reserve(s.coefficients.size());
  const double lr = std::log(r);
  for (std::size_t n = 0; n < s.coefficients.size(); ++n) {
    const double m = std::abs(s.coefficients[n]);
    logs.push_back(m > 0 ? std::log(m) + static_cast<double>(n) * lr : -INFINITY);
  }
  const int nu = argmax_log(logs);
  if (nu < 0) throw std::runtime_error("central_index: zero series");
  if (nu > 0.8 * s.order())
    throw std::runtime_error("central_index: maximal term at index " + std::to_string(nu) + " of " +
                             std::to_string(s.order()) + "; increase the truncation order");
  return nu;
}

int sampled_central_index(const std::function<cplx(cplx)>& W, double r, int N) {
  const int M = std::max(4 * N, 256);
  std::vector<cplx> vals(static_cast<std::size_t>(M));
  for (int j = 0; j < M; ++j) vals[static_cast<std::size_t>(j)] = W(std::polar(r, 2 * std::numbers::pi * j / M));
  std::vector<double> logs(static_cast<std::size_t>(N) + 1);
  double peak = 0;
  std::vector<double> mags(logs.size());
  for (int n = 0; n <= N; ++n) {
    cplx acc = 0;
    for (int j = 0; j < M; ++j)
      acc += vals[static_cast<std::size_t>(j)] * std::polar(1.0, -2 * std::numbers::pi * static_cast<double>(n) * j / M);
    mags[static_cast<std::size_t>(n)] = std::abs(acc) / M;
    peak = std::max(peak, mags[static_cast<std::size_t>(n)]);
  }
  // drop coefficients at rounding level so that symmetric zeros do not register
  for (std::size_t n = 0; n < logs.size(); ++n)
    logs[n] = mags[n] > 1e-10 * peak ? std::log(mags[n]) : -INFINITY;
  const int nu = argmax_log(logs);
  if (nu < 0) throw std::runtime_error("sampled_central_index: zero samples");
  if (nu > 0.8 * N)
    throw std::runtime_error("sampled_central_index: maximal term at index " + std::to_string(nu) + " of " +
                             std::to_string(N));
  return nu;
}

OrderEstimate order_estimate(const ComplexSeries& s, const std::vector<double>& radii) {
  std::vector<std::pair<double, int>> samples;
  for (double r : radii) samples.emplace_back(r, central_index(s, r));
  return fit(std::move(samples));
}

OrderEstimate order_estimate_sampled(const std::function<cplx(cplx)>& W, const std::vector<double>& radii, int N) {
  std::vector<std::pair<double, int>> samples;
  for (double r : radii) samples.emplace_back(r, sampled_central_index(W, r, N));
  return fit(std::move(samples));
}

std::vector<cplx> complex_roots(const Poly& p) {
  if (p.is_zero() || p.degree() < 1) return {};
  const int n = p.degree();
  std::vector<cplx> c;
  const double lead = to_double(p.coeff(n));
  for (int k = 0; k <= n; ++k) c.emplace_back(to_double(p.coeff(k)) / lead, 0.0);
  double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)]));
  const double rad = 1 + bound;
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(0.5 * rad, 2 * std::numbers::pi * (k + 0.25) / n + 0.4);
  auto eval = [&](cplx x) {
    cplx v = 0, d = 0;
    for (int k = n; k >= 0; --k) {
      d = d * x + v;
      v = v * x + c[static_cast<std::size_t>(k)];
    }
    return std::pair{v, d};
  };
  for (int it = 0; it < 500; ++it) {
    double move = 0;
    for (int i = 0; i < n; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      auto [v, d] = eval(zi);
      if (v == cplx(0)) continue;
      const cplx ratio = v / d;
      cplx s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
      const cplx step = ratio / (1.0 - ratio * s);
      zi -= step;
      move = std::max(move, std::abs(step) / (1 + std::abs(zi)));
    }
    if (move < 1e-15) break;
  }
  return z;
}

std::vector<cplx> singular_points(const Coefficients& c) {
  std::vector<cplx> out;
  for (const RatFunc* f : {&c.a, &c.b, &c.alpha, &c.beta, &c.gamma}) {
    if (f->is_zero()) continue;
    for (const Poly* p : {&f->numer(), &f->denom()}) {
      auto r = complex_roots(*p);
      out.insert(out.end(), r.begin(), r.end());
    }
  }
  return out;
}

}  // namespace hayman
