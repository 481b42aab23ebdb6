#include <iostream>

#include <CLI11.hpp>

#include "hayman/cli.hpp"

using namespace hayman::cli;

int main(int argc, char** argv) {
  CLI::App app{"Transcendental meromorphic solutions of w''w - w'^2 + a w'w + b w^2 = alpha w + beta w' + gamma"};
  app.set_version_flag("--version", "hayman 1.0.0");

  std::string command;
  app.add_option("command", command, "classify | growth | verify | series | estimate-order | catalog")->required();

  std::string file;
  bool as_json = false;
  app.add_option("--file", file, "TOML file with [coefficients] and [options] tables");
  app.add_flag("--json", as_json, "print the report as one JSON document");

  std::map<std::string, std::string> coeff_flags, option_flags;
  for (const auto& k : kNormalKeys) app.add_option("--" + k, coeff_flags[k], "coefficient " + k)->group("Coefficients");
  for (const auto& k : kGeneralKeys)
    app.add_option("--" + k, coeff_flags[k], "general form coefficient " + k)->group("General form");
  const std::map<std::string, std::string> option_help{
      {"N", "truncation order (128)"},
      {"tol", "residual tolerance (1e-9)"},
      {"compare_tol", "series/closed form tolerance (1e-6)"},
      {"radius", "comparison radius (1)"},
      {"radii", "comma separated radii for estimate-order (2,4,8,16)"},
      {"c1", "constant c1, complex as 1.5-2i"},
      {"c2", "constant c2"},
      {"k1", "constant k1"},
      {"k2", "constant k2"},
      {"sign", "sign in front of k2 (1 or -1)"},
      {"z0", "series base point"},
      {"w0", "w(z0)"},
      {"w1", "w'(z0)"},
      {"max_pole_multiplicity", "rational solution search bound (30)"},
      {"max_numerator_degree", "rational solution search bound (30)"},
  };
  for (const auto& k : kOptionKeys) {
    std::string flag = k;
    std::replace(flag.begin(), flag.end(), '_', '-');
    app.add_option("--" + flag, option_flags[k], option_help.at(k))->group("Options")->allow_extra_args(false);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  const auto cmd = parse_command(command);
  if (!cmd) {
    std::cerr << "error: unknown command '" << command << "'\n";
    return kInvalidInput;
  }

  EquationInput input;
  if (!file.empty()) {
    try {
      input = load_toml(file);
    } catch (const InputError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kInvalidInput;
    }
  }
  EquationInput flags;
  for (const auto& [k, v] : coeff_flags)
    if (app.count("--" + k)) flags.coefficients[k] = v;
  for (const auto& [k, v] : option_flags) {
    std::string flag = k;
    std::replace(flag.begin(), flag.end(), '_', '-');
    if (app.count("--" + flag)) flags.options[k] = v;
  }
  input = merge(std::move(input), flags);

  const RunResult result = run(*cmd, input);
  if (result.report.contains("error")) std::cerr << "error: " << result.report["error"].get<std::string>() << "\n";
  if (as_json)
    std::cout << result.report.dump(2) << "\n";
  else if (!result.report.contains("error"))
    std::cout << render_text(result.report);
  return result.exit_code;
}
