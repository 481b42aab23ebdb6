#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hayman/ratfunc.hpp"
#include "hayman/symbolic.hpp"

namespace hayman {

/// w''w - w'^2 + a w'w + b w^2 = alpha w + beta w' + gamma
struct Coefficients {
  RatFunc a, b, alpha, beta, gamma;

  [[nodiscard]] Coefficients shift(const Rational& s) const;
  bool operator==(const Coefficients&) const = default;
};

/// Reduces tau1 (f''f - f'^2) form with kappa_i terms via w = f - kappa3.
Coefficients normalize_hayman(const RatFunc& tau1, const RatFunc& tau2, const RatFunc& kappa0,
                              const RatFunc& kappa1, const RatFunc& kappa2, const RatFunc& kappa3);

struct DerivedData {
  std::optional<RatFunc> A;  // absent when gamma == 0
  RatFunc B;
  // Intermediate quantities; only meaningful when A is present.
  RatFunc case5_test;  // A' + aA - 2b
  RatFunc K;           // beta A / 2 - B
  RatFunc Q;           // beta^2 / 4 - gamma
  RatFunc E0;          // B' + 2aB + A alpha - beta b, so that E = E0 + beta g
  std::string diagnostic;
};

DerivedData derived_AB(const Coefficients& c);

struct LocalExpansion {
  int p = 1;
  std::vector<Rational> a0;  // rational leading coefficients
  bool a0_irrational = false;
  std::optional<Rational> delta1, delta2;
  std::vector<Rational> a1;  // a1 = delta1 a0 - delta2, one per a0, when p = 1 and gamma != 0
};

/// Leading terms of w at a zero z0 of w. Throws std::domain_error when z0 is a
/// zero or pole of some nonzero coefficient.
LocalExpansion local_expansion_data(const Coefficients& c, const Rational& z0);

struct ConsistencyReport {
  enum class Status { Consistent, ForcedRational, Inconsistent } status = Status::Consistent;
  RatFunc c2, c1, c0;                 // coefficients of w^2, w, 1
  std::vector<RatFunc> forced;        // rational roots of c2 w^2 + c1 w + c0 when not all zero
};

/// Substitutes w' = p w + q into the equation.
ConsistencyReport consistency_reduce(const RatFunc& p, const RatFunc& q, const Coefficients& c);

std::string to_string(ConsistencyReport::Status s);

/// k2^2 = over_k1sq / k1^2 + over_k1sq2 / k1^4
struct K2Square {
  Rational over_k1sq, over_k1sq2;

  [[nodiscard]] Rational at(const Rational& k1sq) const;
};

struct HomogeneousSpecial {
  RationalSolutionFamily h;  // rational h with h' + a h + b = 0, if any
};
struct Case1 {
  RatFunc alpha;
};
struct Case2 {
  RatFunc h;
};
struct Case3 {
  RationalSolutionFamily h;
};
struct Case4 {
  RatFunc h1, h2, g;
};
struct Case5aRational {
  std::optional<Rational> k1sq;  // absent: any nonzero k1^2
  K2Square k2sq;
  RatFunc R;  // e^{2 int a}
  RatFunc S;  // e^{int A}
  RatFunc A, K;
};
struct Case5aTranscendental {
  MeromorphicUeV R;  // e^{2 int a} = u e^v
  RatFunc A;
};
struct Case5b {
  std::optional<Rational> k1sq;
  RatFunc R, S, A, K;
  std::optional<RatFunc> ea;  // e^{int a}, needed for the closed form
};
struct Case5c {
  std::optional<Rational> k1;
  RatFunc K, Q;
  std::optional<RatFunc> u;  // e^{int (A/2 + 2a)}
};
struct Case5d {
  Rational k1sq;
  RatFunc A, beta;
  RatFunc v;  // e^{int (A/2 + a)}
  bool special = false;  // a' + a^2 + b = 0 and A + 2a = 0
};
struct Case5e {
  RatFunc A, beta;
};
struct NoBranch {
  std::string reason;
};

using BranchData = std::variant<HomogeneousSpecial, Case1, Case2, Case3, Case4, Case5aRational,
                                Case5aTranscendental, Case5b, Case5c, Case5d, Case5e, NoBranch>;

struct Branch {
  BranchData data;
  std::vector<std::string> identities;  // verified exactly
  std::optional<ConsistencyReport> consistency;
  std::vector<std::string> warnings;
};

std::string label(const BranchData& b);
inline std::string label(const Branch& b) { return label(b.data); }

struct Classification {
  Coefficients coefficients;
  DerivedData derived;
  std::vector<Branch> branches;  // never empty; the first is primary

  [[nodiscard]] const Branch& primary() const { return branches.front(); }
  [[nodiscard]] bool has(const std::string& branch_label) const;
};

struct Case4Result {
  std::vector<std::pair<RatFunc, RatFunc>> pairs;  // (h1, h2)
  std::string diagnostic;
};

Case4Result case4_solve(const Coefficients& c, const DerivedData& d);
std::vector<Branch> case5_dispatch(const Coefficients& c, const DerivedData& d);

Classification classify(const Coefficients& c, const LinearOdeBounds& bounds = {});

}  // namespace hayman
