#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hayman/classifier.hpp"

namespace hayman {

using cplx = std::complex<double>;

/// Truncated Taylor expansion sum c_n (z - base)^n, n = 0..N.
struct ComplexSeries {
  cplx base;
  std::vector<cplx> coefficients;

  [[nodiscard]] int order() const { return static_cast<int>(coefficients.size()) - 1; }
  [[nodiscard]] cplx operator()(cplx z) const;
  [[nodiscard]] cplx derivative(cplx z, int k = 1) const;
};

/// Taylor coefficients of f at z0 up to order N. Exact over the rationals when
/// z0 is real, rounded once; complex doubles otherwise. Throws std::domain_error
/// at a pole.
std::vector<cplx> taylor_coefficients(const RatFunc& f, cplx z0, int N);

/// Series solution of the equation with w(z0) = w0, w'(z0) = w1.
ComplexSeries taylor_solve(const Coefficients& c, cplx z0, cplx w0, cplx w1, int N = 128);

/// The same recurrence carried out with 100 significant digits and rounded to
/// double at the end. Rounding errors travel along the recurrence roughly like
/// the Taylor coefficients of a function singular at the zeros of w, so in
/// double precision the tail of a long expansion is noise; use this for large N.
ComplexSeries taylor_solve_extended(const Coefficients& c, cplx z0, cplx w0, cplx w1, int N);

/// Re-expands both sides of the equation and returns the largest coefficientwise
/// mismatch of orders 0..N-2, relative to the size of the terms involved.
double series_back_substitution_error(const Coefficients& c, const ComplexSeries& s);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

struct Jet {
  cplx w, dw, d2w;
};

struct FormConstants {
  std::optional<cplx> c1, c2, k1, k2;
  int sign = 1;
};

struct SolutionFormInstance {
  std::string label;
  cplx c1{0}, c2{0}, k1{1}, k2{1};
  std::string description;
  std::function<std::optional<Jet>(cplx)> eval;  // nullopt at singular points

  [[nodiscard]] std::optional<Jet> operator()(cplx z) const { return eval(z); }
};

SolutionFormInstance case1_form(const Case1& d, cplx c1 = 1, cplx c2 = 0);

/// w = sign k2 cosh(c1 - k1 Phi) e^{-int A/2} - K R / (2 k1^2), Phi' = e^{-int a}.
/// When e^{-int a} or its antiderivative is not rational, Phi is integrated
/// numerically along straight paths from `base`, with Phi(base) = 0.
SolutionFormInstance case5a_form(const Case5aRational& d, const Coefficients& c, const FormConstants& k,
                                 cplx base = 1);

/// w = e^{c1} e^{int g} - K R / (2 k1^2), g = -A/2 + k1 e^{-int a}.
std::optional<SolutionFormInstance> case5b_form(const Case5b& d, const Coefficients& c, const FormConstants& k,
                                                cplx base = 1);

/// Closed form for branches that carry one, with default constants where unset.
std::optional<SolutionFormInstance> default_form(const Branch& br, const Coefficients& c,
                                                 const FormConstants& k = {}, cplx base = 1);

SolutionFormInstance series_form(const ComplexSeries& s, std::string label);
SolutionFormInstance custom_form(std::string label, std::function<std::optional<Jet>(cplx)> eval);

// ---------------------------------------------------------------------------
// Residuals and comparisons
// ---------------------------------------------------------------------------

struct Grid {
  cplx center{0};
  double r_min = 0.5, r_max = 2.0;
  int radii = 10, angles = 10;
  double exclusion = 1e-3;  // distance kept from singular points
};

struct ResidualResult {
  double max_residual = 0;
  cplx worst_point{0};
  int used = 0, excluded = 0;
};

/// max |w''w - w'^2 + a w'w + b w^2 - alpha w - beta w' - gamma| / (1 + |w|^2).
/// Throws std::runtime_error when every grid point is excluded.
ResidualResult residual_check(const Coefficients& c, const SolutionFormInstance& form, const Grid& grid = {});

double compare(const ComplexSeries& s, const SolutionFormInstance& form, double radius);

// ---------------------------------------------------------------------------
// Central index
// ---------------------------------------------------------------------------

/// Largest index of the maximal term |c_n| r^n. Throws std::runtime_error when
/// the maximum sits beyond 0.8 N.
int central_index(const ComplexSeries& s, double r);

/// Central index of an entire function known only through its values, from a
/// discrete Fourier transform of W on |z| = r.
int sampled_central_index(const std::function<cplx(cplx)>& W, double r, int N);

struct OrderEstimate {
  double sigma = 0;                  // slope of log nu against log r
  std::optional<double> hyper;       // slope of log log nu against log r
  std::vector<std::pair<double, int>> samples;
};

OrderEstimate order_estimate(const ComplexSeries& s, const std::vector<double>& radii);
OrderEstimate order_estimate_sampled(const std::function<cplx(cplx)>& W, const std::vector<double>& radii, int N);

// ---------------------------------------------------------------------------
// Numerics
// ---------------------------------------------------------------------------

/// All complex roots of p (Aberth iteration), with multiplicity.
std::vector<cplx> complex_roots(const Poly& p);

/// Zeros and poles of the nonzero coefficients.
std::vector<cplx> singular_points(const Coefficients& c);

}  // namespace hayman
