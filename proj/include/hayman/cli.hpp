#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hayman/growth.hpp"
#include "hayman/series.hpp"

namespace hayman::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kNoBranch = 2, kNumericFailure = 3, kBoundExhausted = 4 };

/// Invalid equation or option values.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string> kNormalKeys{"a", "b", "alpha", "beta", "gamma"};
inline const std::vector<std::string> kGeneralKeys{"tau1", "tau2", "kappa0", "kappa1", "kappa2", "kappa3"};
inline const std::vector<std::string> kOptionKeys{"N",  "tol", "compare_tol", "radius", "radii", "c1",
                                                  "c2", "k1",  "k2",          "sign",   "z0",    "w0",
                                                  "w1", "max_pole_multiplicity",       "max_numerator_degree"};

/// Raw text values, as given by flags or a TOML file.
struct EquationInput {
  std::map<std::string, std::string> coefficients;
  std::map<std::string, std::string> options;
};

/// Reads [coefficients] and [options] tables. Throws InputError.
EquationInput load_toml(const std::string& path);

/// Values present in `over` replace those in `base`.
EquationInput merge(EquationInput base, const EquationInput& over);

struct Options {
  int N = 128;
  double tol = 1e-9;
  double compare_tol = 1e-6;
  double radius = 1;
  std::vector<double> radii{2, 4, 8, 16};
  FormConstants constants;
  std::optional<cplx> z0, w0, w1;
  LinearOdeBounds bounds;
};

/// "1.5", "-2i", "3-0.5i", "i".
cplx parse_complex(const std::string& text);

Options parse_options(const std::map<std::string, std::string>& raw);

struct ResolvedEquation {
  Coefficients coefficients;
  bool general_form = false;
  std::map<std::string, RatFunc> general;
};

/// Exactly one of the normal-form and general-form key sets may be used;
/// missing keys of the chosen set are zero. Throws InputError or ParseError.
ResolvedEquation resolve(const EquationInput& input);

enum class Command { Classify, Growth, Verify, Series, EstimateOrder, Catalog };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);
using hayman::to_string;

struct RunResult {
  json report;
  int exit_code = kOk;
};

/// Never throws for bad input: parse and validation errors become exit code 1
/// with an "error" field.
RunResult run(Command command, const EquationInput& input);

std::string render_text(const json& report);

// ---------------------------------------------------------------------------
// Report pieces
// ---------------------------------------------------------------------------

json to_json(cplx z);
json to_json(const Coefficients& c);
json to_json(const Branch& b);
json to_json(const DerivedData& d);
json to_json(const GrowthReport& g);
json to_json(const InfiniteOrderScenarios& s);
json to_json(const ResidualResult& r);

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = true;
  bool informational = false;  // reported, not counted
  std::string detail;
};

struct CatalogOutcome {
  std::string name;
  Coefficients coefficients;
  std::string branch;
  GrowthReport growth;
  InfiniteOrderScenarios scenarios;
  std::vector<CheckResult> checks;
  std::vector<std::string> open_questions;

  [[nodiscard]] bool pass() const;
};

struct CatalogEntry {
  std::string name;
  Coefficients coefficients;
  std::string description;
  std::string expected_branch;
  std::string expected_growth;  // to_string(GrowthReport)
  std::function<void(const Classification&, CatalogOutcome&)> checks;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Runs one entry end to end.
CatalogOutcome run_catalog_entry(const CatalogEntry& entry);

/// Entries run concurrently; results keep catalog order.
std::vector<CatalogOutcome> run_catalog();

json to_json(const CatalogOutcome& o);

}  // namespace hayman::cli
