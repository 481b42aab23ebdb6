#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <sstream>

#include <toml.hpp>

#include "hayman/cli.hpp"
#include "hayman/parse.hpp"

namespace hayman::cli {
namespace {

bool known(const std::vector<std::string>& keys, const std::string& k) {
  return std::find(keys.begin(), keys.end(), k) != keys.end();
}

std::string scalar_text(const toml::node& n, const std::string& where) {
  if (auto s = n.value_exact<std::string>()) return *s;
  if (auto i = n.value_exact<int64_t>()) return std::to_string(*i);
  if (auto d = n.value_exact<double>()) {
    std::ostringstream os;
    os.precision(17);
    os << *d;
    return os.str();
  }
  throw InputError(where + ": expected a string or a number");
}

double parse_double(const std::string& key, const std::string& text) {
  double v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || !std::isfinite(v)) throw InputError("option " + key + ": not a number: '" + text + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) throw InputError("option " + key + ": not an integer: '" + text + "'");
  return v;
}

}  // namespace

EquationInput load_toml(const std::string& path) {
  toml::table tbl;
  try {
    tbl = toml::parse_file(path);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << path << ":" << e.source().begin.line << ":" << e.source().begin.column << ": " << e.description();
    throw InputError(os.str());
  }
  EquationInput input;
  for (auto&& [key, node] : tbl) {
    const std::string k(key.str());
    if (k != "coefficients" && k != "options") throw InputError(path + ": unknown table [" + k + "]");
    const auto* t = node.as_table();
    if (!t) throw InputError(path + ": " + k + " must be a table");
    for (auto&& [sub, value] : *t) {
      const std::string name(sub.str());
      if (k == "coefficients") {
        if (!known(kNormalKeys, name) && !known(kGeneralKeys, name))
          throw InputError(path + ": unknown coefficient '" + name + "'");
        input.coefficients[name] = scalar_text(value, "coefficients." + name);
      } else {
        if (!known(kOptionKeys, name)) throw InputError(path + ": unknown option '" + name + "'");
        if (const auto* arr = value.as_array()) {
          std::string joined;
          for (const auto& x : *arr) joined += (joined.empty() ? "" : ",") + scalar_text(x, "options." + name);
          input.options[name] = joined;
        } else {
          input.options[name] = scalar_text(value, "options." + name);
        }
      }
    }
  }
  return input;
}

EquationInput merge(EquationInput base, const EquationInput& over) {
  for (const auto& [k, v] : over.coefficients) base.coefficients[k] = v;
  for (const auto& [k, v] : over.options) base.options[k] = v;
  return base;
}

cplx parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  const std::string bad = "not a complex number: '" + text + "'";
  auto number = [&](const std::string& x) {
    if (x.empty()) throw InputError(bad);
    double v = 0;
    const char* b = x.data() + (x[0] == '+' ? 1 : 0);
    auto [p, ec] = std::from_chars(b, x.data() + x.size(), v);
    if (ec != std::errc() || p != x.data() + x.size() || !std::isfinite(v)) throw InputError(bad);
    return v;
  };
  if (t.empty()) throw InputError(bad);
  if (t.back() != 'i') return {number(t), 0.0};
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : number(re), number(im)};
}

Options parse_options(const std::map<std::string, std::string>& raw) {
  Options o;
  for (const auto& [k, v] : raw) {
    if (!known(kOptionKeys, k)) throw InputError("unknown option '" + k + "'");
    try {
      if (k == "N") o.N = parse_int(k, v);
      else if (k == "tol") o.tol = parse_double(k, v);
      else if (k == "compare_tol") o.compare_tol = parse_double(k, v);
      else if (k == "radius") o.radius = parse_double(k, v);
      else if (k == "radii") {
        o.radii.clear();
        std::stringstream ss(v);
        for (std::string item; std::getline(ss, item, ',');) o.radii.push_back(parse_double(k, item));
      } else if (k == "c1") o.constants.c1 = parse_complex(v);
      else if (k == "c2") o.constants.c2 = parse_complex(v);
      else if (k == "k1") o.constants.k1 = parse_complex(v);
      else if (k == "k2") o.constants.k2 = parse_complex(v);
      else if (k == "sign") o.constants.sign = parse_int(k, v);
      else if (k == "z0") o.z0 = parse_complex(v);
      else if (k == "w0") o.w0 = parse_complex(v);
      else if (k == "w1") o.w1 = parse_complex(v);
      else if (k == "max_pole_multiplicity") o.bounds.max_pole_multiplicity = parse_int(k, v);
      else if (k == "max_numerator_degree") o.bounds.max_numerator_degree = parse_int(k, v);
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()).find("option") == 0 ? e.what() : "option " + k + ": " + e.what());
    }
  }
  if (o.N < 2) throw InputError("option N: must be at least 2");
  if (!(o.tol > 0) || !(o.compare_tol > 0) || !(o.radius > 0)) throw InputError("tolerances and radius must be positive");
  for (double r : o.radii)
    if (!(r > 0)) throw InputError("option radii: radii must be positive");
  if (o.constants.sign != 1 && o.constants.sign != -1) throw InputError("option sign: must be 1 or -1");
  if (o.constants.k1 && *o.constants.k1 == cplx(0)) throw InputError("option k1: must be nonzero");
  if (o.bounds.max_pole_multiplicity < 0 || o.bounds.max_numerator_degree < 0)
    throw InputError("search bounds must be non-negative");
  return o;
}

ResolvedEquation resolve(const EquationInput& input) {
  bool normal = false, general = false;
  for (const auto& [k, v] : input.coefficients) {
    if (known(kNormalKeys, k)) normal = true;
    else if (known(kGeneralKeys, k)) general = true;
    else throw InputError("unknown coefficient '" + k + "'");
  }
  if (normal && general) throw InputError("give either a, b, alpha, beta, gamma or tau1, tau2, kappa0..kappa3, not both");
  auto get = [&](const std::string& k) -> RatFunc {
    auto it = input.coefficients.find(k);
    if (it == input.coefficients.end()) return RatFunc();
    try {
      return parse_ratfunc(it->second);
    } catch (const ParseError& e) {
      throw InputError(k + " = \"" + it->second + "\": " + e.what());
    }
  };
  ResolvedEquation r;
  if (general) {
    r.general_form = true;
    for (const auto& k : kGeneralKeys) r.general[k] = get(k);
    r.coefficients = normalize_hayman(r.general["tau1"], r.general["tau2"], r.general["kappa0"], r.general["kappa1"],
                                      r.general["kappa2"], r.general["kappa3"]);
  } else {
    r.coefficients = {get("a"), get("b"), get("alpha"), get("beta"), get("gamma")};
  }
  return r;
}

}  // namespace hayman::cli
