#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hayman/classifier.hpp"

namespace hayman {

struct GrowthReport {
  enum class Kind { FiniteOrder, HyperOrderExact, HyperOrderBound, Unknown };
  Kind kind = Kind::Unknown;
  Rational order;      // FiniteOrder
  bool exact = false;  // FiniteOrder
  int n = 0;           // HyperOrderExact, HyperOrderBound
  std::string provenance;
  std::string diagnostic;
  std::vector<std::string> notes;
};

std::string to_string(GrowthReport::Kind k);
std::string to_string(const GrowthReport& g);

/// Order of the transcendental solutions of y' = f y (+ rational forcing).
struct LinearGrowth {
  std::optional<int> order;  // 0: every solution is non-transcendental
  std::string diagnostic;
};
LinearGrowth linear_ode_growth(const RatFunc& f);

GrowthReport growth_report(const Branch& br, const Coefficients& c, const LinearOdeBounds& bounds = {});
/// Report for the primary branch.
GrowthReport growth_report(const Classification& cl, const Coefficients& c, const LinearOdeBounds& bounds = {});

struct InfiniteOrderScenarios {
  bool a_not_to_zero = false;  // a != 0 and deg_inf(a) >= 0
  // first scenario
  bool gamma_zero = false;
  bool alpha_beta_identity = false;  // alpha + beta' + a beta = 0
  // second scenario
  bool alpha_beta_zero = false;
  bool gamma_identity = false;  // 2(a' + a^2 + b) + (gamma'/gamma)' + a gamma'/gamma = 0

  [[nodiscard]] bool scenario1() const { return gamma_zero && alpha_beta_identity && a_not_to_zero; }
  [[nodiscard]] bool scenario2() const {
    return !gamma_zero && alpha_beta_zero && gamma_identity && a_not_to_zero;
  }
};

InfiniteOrderScenarios infinite_order_scenarios(const Coefficients& c);

}  // namespace hayman
