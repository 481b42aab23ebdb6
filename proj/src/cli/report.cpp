#include <sstream>

#include "hayman/cli.hpp"

namespace hayman::cli {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

json opt(const std::optional<RatFunc>& f) { return f ? json(to_string(*f)) : json(nullptr); }
json opt(const std::optional<Rational>& q) { return q ? json(to_string(*q)) : json(nullptr); }

json family(const RationalSolutionFamily& h) {
  return {{"particular", opt(h.particular)},
          {"homogeneous", opt(h.homogeneous)},
          {"complete", h.complete},
          {"diagnostic", h.diagnostic}};
}

std::string k2_text(const K2Square& k) {
  return to_string(k.over_k1sq) + "/k1^2 + " + to_string(k.over_k1sq2) + "/k1^4";
}

json branch_data(const BranchData& d) {
  return std::visit(
      overloaded{
          [](const HomogeneousSpecial& x) { return json{{"h", family(x.h)}}; },
          [](const Case1& x) { return json{{"alpha", to_string(x.alpha)}}; },
          [](const Case2& x) { return json{{"h", to_string(x.h)}}; },
          [](const Case3& x) { return json{{"h", family(x.h)}}; },
          [](const Case4& x) {
            return json{{"h1", to_string(x.h1)}, {"h2", to_string(x.h2)}, {"g", to_string(x.g)}};
          },
          [](const Case5aRational& x) {
            json k2 = {{"over_k1sq", to_string(x.k2sq.over_k1sq)},
                       {"over_k1sq2", to_string(x.k2sq.over_k1sq2)},
                       {"text", k2_text(x.k2sq)}};
            if (x.k1sq) k2["value"] = to_string(x.k2sq.at(*x.k1sq));
            return json{{"k1sq", opt(x.k1sq)}, {"k2sq", k2},           {"e2a", to_string(x.R)},
                        {"eA", to_string(x.S)}, {"A", to_string(x.A)}, {"K", to_string(x.K)}};
          },
          [](const Case5aTranscendental& x) {
            return json{{"e2a_u", to_string(x.R.u)}, {"e2a_v", to_string(x.R.v)}, {"A", to_string(x.A)}};
          },
          [](const Case5b& x) {
            return json{{"k1sq", opt(x.k1sq)}, {"e2a", to_string(x.R)}, {"eA", to_string(x.S)},
                        {"A", to_string(x.A)}, {"K", to_string(x.K)},   {"ea", opt(x.ea)}};
          },
          [](const Case5c& x) {
            return json{{"k1", opt(x.k1)}, {"K", to_string(x.K)}, {"Q", to_string(x.Q)}, {"u", opt(x.u)}};
          },
          [](const Case5d& x) {
            return json{{"k1sq", to_string(x.k1sq)}, {"A", to_string(x.A)},  {"beta", to_string(x.beta)},
                        {"v", to_string(x.v)},       {"special", x.special}};
          },
          [](const Case5e& x) { return json{{"A", to_string(x.A)}, {"beta", to_string(x.beta)}}; },
          [](const NoBranch& x) { return json{{"reason", x.reason}}; },
      },
      d);
}

std::string number(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string complex_text(const json& z) {
  const double re = z[0], im = z[1];
  if (im == 0) return number(re);
  return number(re) + (im < 0 ? " - " : " + ") + number(std::abs(im)) + "i";
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Coefficients& c) {
  return {{"a", to_string(c.a)},
          {"b", to_string(c.b)},
          {"alpha", to_string(c.alpha)},
          {"beta", to_string(c.beta)},
          {"gamma", to_string(c.gamma)}};
}

json to_json(const Branch& b) {
  json j = {{"label", label(b)}, {"data", branch_data(b.data)}, {"identities", b.identities},
            {"consistency", nullptr}, {"warnings", b.warnings}};
  if (b.consistency) {
    json forced = json::array();
    for (const auto& f : b.consistency->forced) forced.push_back(to_string(f));
    j["consistency"] = {{"status", to_string(b.consistency->status)},
                        {"c2", to_string(b.consistency->c2)},
                        {"c1", to_string(b.consistency->c1)},
                        {"c0", to_string(b.consistency->c0)},
                        {"forced", forced}};
  }
  return j;
}

json to_json(const DerivedData& d) {
  return {{"A", opt(d.A)},
          {"B", to_string(d.B)},
          {"case5_test", d.A ? json(to_string(d.case5_test)) : json(nullptr)},
          {"K", d.A ? json(to_string(d.K)) : json(nullptr)},
          {"Q", d.A ? json(to_string(d.Q)) : json(nullptr)},
          {"diagnostic", d.diagnostic}};
}

json to_json(const GrowthReport& g) {
  const bool finite = g.kind == GrowthReport::Kind::FiniteOrder;
  const bool hyper = g.kind == GrowthReport::Kind::HyperOrderExact || g.kind == GrowthReport::Kind::HyperOrderBound;
  return {{"kind", to_string(g.kind)},
          {"order", finite ? json(to_string(g.order)) : json(nullptr)},
          {"exact", g.exact},
          {"n", hyper ? json(g.n) : json(nullptr)},
          {"summary", to_string(g)},
          {"provenance", g.provenance},
          {"diagnostic", g.diagnostic},
          {"notes", g.notes}};
}

json to_json(const InfiniteOrderScenarios& s) {
  return {{"a_not_to_zero", s.a_not_to_zero},
          {"gamma_zero", s.gamma_zero},
          {"alpha_beta_identity", s.alpha_beta_identity},
          {"alpha_beta_zero", s.alpha_beta_zero},
          {"gamma_identity", s.gamma_identity},
          {"scenario1", s.scenario1()},
          {"scenario2", s.scenario2()}};
}

json to_json(const ResidualResult& r) {
  return {{"max_residual", r.max_residual},
          {"worst_point", to_json(r.worst_point)},
          {"used", r.used},
          {"excluded", r.excluded}};
}

std::string render_text(const json& r) {
  std::ostringstream os;
  if (r.contains("error")) {
    os << "error: " << r["error"].get<std::string>() << "\n";
    return os.str();
  }
  if (r.contains("input")) {
    const auto& in = r["input"];
    os << "equation: w''w - w'^2 + a w'w + b w^2 = alpha w + beta w' + gamma\n";
    for (const char* k : {"a", "b", "alpha", "beta", "gamma"})
      os << "  " << k << " = " << in[k].get<std::string>() << "\n";
  }
  if (r.contains("classification")) {
    const auto& cl = r["classification"];
    os << "classification: " << cl["primary"].get<std::string>() << "\n";
    for (const auto& b : cl["branches"]) {
      os << "  [" << b["label"].get<std::string>() << "]\n";
      for (const auto& [k, v] : b["data"].items()) {
        if (v.is_null()) continue;
        os << "    " << k << " = ";
        if (v.is_object()) {
          if (v.contains("text")) os << v["text"].get<std::string>();
          else os << v.dump();
        } else if (v.is_string()) {
          os << v.get<std::string>();
        } else {
          os << v.dump();
        }
        os << "\n";
      }
      for (const auto& id : b["identities"]) os << "    verified: " << id.get<std::string>() << "\n";
      if (!b["consistency"].is_null()) os << "    consistency: " << b["consistency"]["status"].get<std::string>() << "\n";
      for (const auto& w : b["warnings"]) os << "    warning: " << w.get<std::string>() << "\n";
    }
  }
  if (r.contains("derived")) {
    const auto& d = r["derived"];
    os << "derived: A = " << (d["A"].is_null() ? std::string("undefined") : d["A"].get<std::string>())
       << ", B = " << d["B"].get<std::string>() << "\n";
  }
  if (r.contains("growth")) {
    os << "growth:\n";
    for (const auto& g : r["growth"]) {
      os << "  [" << g["branch"].get<std::string>() << "] " << g["summary"].get<std::string>() << "\n";
      for (const auto& n : g["notes"]) os << "    note: " << n.get<std::string>() << "\n";
    }
  }
  if (r.contains("scenarios")) {
    const auto& s = r["scenarios"];
    os << "infinite-order scenarios: scenario 1 " << (s["scenario1"].get<bool>() ? "yes" : "no") << ", scenario 2 "
       << (s["scenario2"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (r.contains("verification")) {
    os << "verification:\n";
    for (const auto& v : r["verification"]) {
      os << "  [" << v["branch"].get<std::string>() << "] ";
      if (v["max_residual"].is_null()) {
        os << v["note"].get<std::string>() << "\n";
        continue;
      }
      os << v["description"].get<std::string>() << "\n    max residual " << number(v["max_residual"].get<double>())
         << " over " << v["used"].get<int>() << " points (tolerance " << number(v["tolerance"].get<double>()) << "): "
         << (v["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
    }
  }
  if (r.contains("series")) {
    const auto& s = r["series"];
    os << "series at z0 = " << complex_text(s["z0"]) << ", N = " << s["N"].get<int>() << "\n";
    int shown = 0;
    for (const auto& c : s["coefficients"]) {
      if (shown >= 8) break;
      os << "  c" << shown++ << " = " << complex_text(c) << "\n";
    }
    os << "  back-substitution error " << number(s["back_substitution_error"].get<double>()) << "\n";
    if (!s["compare"].is_null())
      os << "  compare with " << s["compare"]["form"].get<std::string>() << " on radius "
         << number(s["compare"]["radius"].get<double>()) << ": " << number(s["compare"]["discrepancy"].get<double>())
         << " (" << (s["compare"]["pass"].get<bool>() ? "PASS" : "FAIL") << ")\n";
  }
  if (r.contains("order_estimate")) {
    const auto& e = r["order_estimate"];
    if (e.contains("error")) {
      os << "order estimate: " << e["error"].get<std::string>() << "\n";
    } else {
      os << "order estimate: sigma ~ " << number(e["sigma"].get<double>());
      if (!e["hyper"].is_null()) os << ", log log nu slope ~ " << number(e["hyper"].get<double>());
      os << "\n";
      for (const auto& s : e["samples"]) os << "  r = " << number(s["r"].get<double>()) << ": nu = " << s["nu"].get<int>() << "\n";
      if (!e["expected"].is_null())
        os << "  growth report: " << e["expected"].get<std::string>() << "\n";
    }
  }
  if (r.contains("entries")) {
    for (const auto& e : r["entries"]) {
      os << (e["pass"].get<bool>() ? "PASS " : "FAIL ") << e["name"].get<std::string>() << "  ["
         << e["branch"].get<std::string>() << "; " << e["growth"]["summary"].get<std::string>() << "]\n";
      for (const auto& c : e["checks"])
        os << "    " << (c["informational"].get<bool>() ? "info" : (c["pass"].get<bool>() ? "ok  " : "FAIL")) << " "
           << c["name"].get<std::string>() << (c["detail"].get<std::string>().empty() ? "" : ": ")
           << c["detail"].get<std::string>() << "\n";
      for (const auto& q : e["open_questions"]) os << "    open question: " << q.get<std::string>() << "\n";
    }
    os << (r["pass"].get<bool>() ? "catalog: all entries pass" : "catalog: failures present") << "\n";
  }
  if (r.contains("warnings"))
    for (const auto& w : r["warnings"]) os << "warning: " << w.get<std::string>() << "\n";
  return os.str();
}

}  // namespace hayman::cli
