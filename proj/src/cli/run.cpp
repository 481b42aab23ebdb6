#include <cmath>

#include "hayman/cli.hpp"
#include "hayman/parse.hpp"

namespace hayman::cli {
namespace {

constexpr double kBackSubstitutionTolerance = 1e-8;
constexpr double kOrderAgreement = 0.15;

bool regular(const Coefficients& c, const std::vector<cplx>& singular, cplx z) {
  for (const cplx& s : singular)
    if (std::abs(z - s) < 0.05) return false;
  for (const RatFunc* f : {&c.a, &c.b, &c.alpha, &c.beta, &c.gamma})
    if (!eval_complex(*f, z)) return false;
  return true;
}

cplx pick_point(const Coefficients& c, std::initializer_list<cplx> candidates) {
  const auto singular = singular_points(c);
  for (cplx z : candidates)
    if (regular(c, singular, z)) return z;
  throw InputError("no regular base point among the defaults; pass --z0");
}

bool bound_exhausted(const Classification& cl) {
  for (const auto& br : cl.branches) {
    if (auto* h = std::get_if<HomogeneousSpecial>(&br.data); h && !h->h.complete) return true;
    if (auto* h = std::get_if<Case3>(&br.data); h && !h->h.complete) return true;
  }
  return false;
}

struct FormChoice {
  std::string branch;
  SolutionFormInstance form;
};

std::vector<FormChoice> forms_for(const Classification& cl, const Options& o, cplx base) {
  std::vector<FormChoice> out;
  for (const auto& br : cl.branches) {
    try {
      if (auto f = default_form(br, cl.coefficients, o.constants, base)) out.push_back({label(br), std::move(*f)});
    } catch (const std::domain_error&) {
    }
  }
  return out;
}

json constants_json(const SolutionFormInstance& f) {
  return {{"c1", to_json(f.c1)}, {"c2", to_json(f.c2)}, {"k1", to_json(f.k1)}, {"k2", to_json(f.k2)}};
}

struct SeriesSetup {
  cplx z0, w0, w1;
  std::optional<FormChoice> form;
};

SeriesSetup series_setup(const Classification& cl, const Options& o, const std::vector<FormChoice>& forms) {
  SeriesSetup s;
  s.z0 = o.z0 ? *o.z0 : pick_point(cl.coefficients, {0, 1, cplx(0, 1), 2});
  for (const auto& f : forms) {
    if (auto j = f.form(s.z0); j && std::abs(j->w) > 1e-12) {
      s.form = f;
      if (!o.w0) s.w0 = j->w;
      if (!o.w1) s.w1 = j->dw;
      break;
    }
  }
  if (o.w0) s.w0 = *o.w0;
  if (o.w1) s.w1 = *o.w1;
  if (!s.form && (!o.w0 || !o.w1)) throw InputError("no closed form to take initial values from; pass --w0 and --w1");
  if (s.w0 == cplx(0)) throw InputError("w0 must be nonzero");
  return s;
}

json series_json(const ComplexSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(to_json(c));
  return coeffs;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "classify") return Command::Classify;
  if (name == "growth") return Command::Growth;
  if (name == "verify") return Command::Verify;
  if (name == "series") return Command::Series;
  if (name == "estimate-order") return Command::EstimateOrder;
  if (name == "catalog") return Command::Catalog;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Classify: return "classify";
    case Command::Growth: return "growth";
    case Command::Verify: return "verify";
    case Command::Series: return "series";
    case Command::EstimateOrder: return "estimate-order";
    case Command::Catalog: return "catalog";
  }
  return "?";
}

RunResult run(Command command, const EquationInput& input) {
  RunResult out;
  json& r = out.report;
  r["command"] = to_string(command);
  r["warnings"] = json::array();

  if (command == Command::Catalog) {
    const auto outcomes = run_catalog();
    bool pass = true;
    r["entries"] = json::array();
    for (const auto& o : outcomes) {
      r["entries"].push_back(to_json(o));
      pass = pass && o.pass();
    }
    r["pass"] = pass;
    out.exit_code = pass ? kOk : kNumericFailure;
    r["exit_code"] = out.exit_code;
    return out;
  }

  try {
    const Options o = parse_options(input.options);
    const ResolvedEquation eq = resolve(input);
    const Coefficients& c = eq.coefficients;
    r["input"] = to_json(c);
    if (eq.general_form) {
      json g;
      for (const auto& [k, v] : eq.general) g[k] = to_string(v);
      r["input"]["general"] = g;
    }

    const Classification cl = classify(c, o.bounds);
    json branches = json::array();
    for (const auto& br : cl.branches) {
      branches.push_back(to_json(br));
      for (const auto& w : br.warnings) r["warnings"].push_back(label(br) + ": " + w);
    }
    r["classification"] = {{"primary", label(cl.primary())}, {"branches", branches}};
    r["derived"] = to_json(cl.derived);

    const bool exhausted = bound_exhausted(cl);
    const bool no_branch = label(cl.primary()) == "NoBranch";
    bool numeric_failure = false;

    if (command == Command::Growth || command == Command::EstimateOrder) {
      r["growth"] = json::array();
      for (const auto& br : cl.branches) {
        json g = to_json(growth_report(br, c, o.bounds));
        g["branch"] = label(br);
        r["growth"].push_back(g);
      }
      r["scenarios"] = to_json(infinite_order_scenarios(c));
    }

    if (command == Command::Verify) {
      r["verification"] = json::array();
      Grid grid;
      grid.center = o.z0.value_or(0);
      const cplx base = pick_point(c, {grid.center + 1.0, grid.center + cplx(1, 1), grid.center + 1.5});
      const auto forms = forms_for(cl, o, base);
      for (const auto& br : cl.branches) {
        json v = {{"branch", label(br)}, {"max_residual", nullptr}, {"tolerance", o.tol}};
        bool found = false;
        for (const auto& f : forms) {
          if (f.branch != label(br)) continue;
          found = true;
          try {
            auto res = residual_check(c, f.form, grid);
            v.update(to_json(res));
            v["form"] = f.form.label;
            v["description"] = f.form.description;
            v["constants"] = constants_json(f.form);
            v["pass"] = res.max_residual < o.tol;
            numeric_failure = numeric_failure || !v["pass"].get<bool>();
          } catch (const std::exception& e) {
            v["note"] = std::string("verification failed: ") + e.what();
            numeric_failure = true;
          }
        }
        if (!found) v["note"] = "no closed form evaluator for this branch";
        r["verification"].push_back(v);
      }
    }

    if (command == Command::Series || command == Command::EstimateOrder) {
      const cplx base = pick_point(c, {o.z0.value_or(0) + 1.0, o.z0.value_or(0) + cplx(1, 1), 1.5});
      const auto forms = forms_for(cl, o, base);
      const SeriesSetup setup = series_setup(cl, o, forms);
      try {
        const ComplexSeries s = command == Command::Series ? taylor_solve(c, setup.z0, setup.w0, setup.w1, o.N)
                                                           : taylor_solve_extended(c, setup.z0, setup.w0, setup.w1, o.N);
        const double back = series_back_substitution_error(c, s);
        if (command == Command::Series) {
          json sj = {{"z0", to_json(setup.z0)},
                     {"w0", to_json(setup.w0)},
                     {"w1", to_json(setup.w1)},
                     {"N", o.N},
                     {"coefficients", series_json(s)},
                     {"back_substitution_error", back},
                     {"back_substitution_tolerance", kBackSubstitutionTolerance},
                     {"compare", nullptr}};
          numeric_failure = numeric_failure || back > kBackSubstitutionTolerance;
          if (setup.form) {
            const double d = compare(s, setup.form->form, o.radius);
            sj["compare"] = {{"form", setup.form->branch},
                             {"radius", o.radius},
                             {"discrepancy", d},
                             {"tolerance", o.compare_tol},
                             {"pass", d < o.compare_tol}};
            numeric_failure = numeric_failure || !(d < o.compare_tol);
          }
          r["series"] = sj;
        } else {
          if (o.radii.size() < 3) throw InputError("estimate-order needs at least three radii");
          json e = {{"method", "central index of the 100-digit Taylor series at z0"},
                    {"z0", to_json(setup.z0)},
                    {"N", o.N},
                    {"radii", o.radii}};
          const GrowthReport g = growth_report(cl.primary(), c, o.bounds);
          e["expected"] = to_string(g);
          try {
            const OrderEstimate est = order_estimate(s, o.radii);
            e["sigma"] = est.sigma;
            e["hyper"] = est.hyper ? json(*est.hyper) : json(nullptr);
            e["samples"] = json::array();
            for (auto [rad, nu] : est.samples) e["samples"].push_back({{"r", rad}, {"nu", nu}});
            e["agrees"] = nullptr;
            if (g.kind == GrowthReport::Kind::FiniteOrder && g.exact) {
              const bool ok = std::abs(est.sigma - to_double(g.order)) <= kOrderAgreement;
              e["agrees"] = ok;
              e["tolerance"] = kOrderAgreement;
              numeric_failure = numeric_failure || !ok;
            }
          } catch (const std::runtime_error& ex) {
            e["error"] = ex.what();
            numeric_failure = true;
          }
          r["order_estimate"] = e;
        }
      } catch (const std::domain_error& ex) {
        r["series"] = {{"error", ex.what()}};
        numeric_failure = true;
      }
    }

    if (exhausted) {
      r["warnings"].push_back("rational solution search bounds were reached; results may be incomplete");
      out.exit_code = kBoundExhausted;
    } else if (no_branch) {
      out.exit_code = kNoBranch;
    } else if (numeric_failure) {
      out.exit_code = kNumericFailure;
    }
  } catch (const InputError& e) {
    r["error"] = e.what();
    out.exit_code = kInvalidInput;
  } catch (const ParseError& e) {
    r["error"] = e.what();
    out.exit_code = kInvalidInput;
  }
  r["exit_code"] = out.exit_code;
  return out;
}

}  // namespace hayman::cli
