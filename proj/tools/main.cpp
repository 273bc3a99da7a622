#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdicke/cli.hpp"

namespace {

int config_fail(const std::string& msg) {
  nlohmann::json e;
  e["error"] = {{"code", 2}, {"kind", "config"}, {"message", msg}};
  std::cerr << e.dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-hermitian Dicke model tools"};
  app.name("pdicke");

  std::string command;
  app.add_option("command", command,
                 "one of: validate, spectrum, metric-check, exact, scan")
      ->required()
      ->check(CLI::IsMember({"validate", "spectrum", "metric-check", "exact", "scan"}));

  std::string config_path;
  app.add_option("--config", config_path, "key = value config file");

  // every config key doubles as a flag; flags override the file
  std::vector<std::pair<std::string, std::string>> overrides;
  auto add_kv = [&app, &overrides](const std::string& flag, const std::string& key,
                                   const std::string& help) {
    app.add_option_function<std::string>(
           flag,
           [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); },
           help)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  };
  add_kv("--omega", "omega", "boson frequency");
  add_kv("--omega0", "omega0", "spin splitting");
  add_kv("--theta1", "theta1", "a^2 coupling");
  add_kv("--theta2", "theta2", "a^dag^2 coupling");
  add_kv("--alpha", "alpha", "J- a^dag coupling");
  add_kv("--beta", "beta", "J+ a coupling");
  add_kv("--gamma", "gamma", "J- a coupling");
  add_kv("--delta", "delta", "J+ a^dag coupling");
  add_kv("--xi1", "xi1", "squeeze phase");
  add_kv("--xi2", "xi2", "rotating phase");
  add_kv("--xi3", "xi3", "counter-rotating phase");
  add_kv("--j", "j", "spin length (half-integer)");
  add_kv("--cutoff", "cutoff", "boson cutoff");
  add_kv("--sweep-param", "sweep.param", "scan: parameter to sweep");
  add_kv("--sweep-start", "sweep.start", "scan: first coupling value");
  add_kv("--sweep-stop", "sweep.stop", "scan: last coupling value");
  add_kv("--sweep-steps", "sweep.steps", "scan: grid size (>= 2)");
  add_kv("--sweep-j-list", "sweep.j_list", "scan: comma separated j values");
  add_kv("--output", "output.path", "write results here instead of stdout");
  add_kv("--format", "output.format", "csv or json");
  add_kv("--plot", "plot.path", "scan: write an SVG of the curves");

  pdicke::RunConfig cfg;
  int levels = cfg.levels;
  int min_cutoff = cfg.convergence.min_cutoff;
  int max_cutoff = cfg.convergence.max_cutoff;
  double conv_tol = cfg.convergence.tol;
  int k_max = 0;
  bool allow_invalid = false;
  app.add_option("--levels", levels, "exact: rows in the level table");
  app.add_option("--min-cutoff", min_cutoff, "scan: starting boson cutoff");
  app.add_option("--max-cutoff", max_cutoff, "scan: boson cutoff cap");
  app.add_option("--convergence-tol", conv_tol, "scan: ground-energy tolerance");
  auto* k_opt = app.add_option("--k-max", k_max, "exact: largest excitation sector");
  app.add_flag("--allow-invalid", allow_invalid,
               "spectrum: diagnose parameters that fail validation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return config_fail(e.what());
  }

  cfg.command = command;
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw pdicke::config_error("cannot read config file: " + config_path);
      std::stringstream buf;
      buf << f.rdbuf();
      for (const auto& [k, v] : pdicke::parse_config_text(buf.str()))
        pdicke::apply_config(cfg, k, v);
    }
    for (const auto& [k, v] : overrides) pdicke::apply_config(cfg, k, v);
  } catch (const pdicke::config_error& e) {
    return config_fail(e.what());
  }
  cfg.levels = levels;
  cfg.convergence.min_cutoff = min_cutoff;
  cfg.convergence.max_cutoff = max_cutoff;
  cfg.convergence.tol = conv_tol;
  cfg.allow_invalid = allow_invalid;
  if (k_opt->count() > 0) cfg.k_max = k_max;

  return pdicke::run(cfg, std::cout, std::cerr);
}
