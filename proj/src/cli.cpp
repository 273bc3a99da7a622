#include "pdicke/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "pdicke/exact.hpp"
#include "pdicke/metric.hpp"
#include "pdicke/spectral.hpp"

namespace pdicke {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  if (!value.empty()) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() + value.size()) return v;
  }
  throw config_error(key + ": cannot parse number '" + value + "'");
}

int parse_int(const std::string& key, const std::string& value) {
  if (!value.empty()) {
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() + value.size() && v >= INT_MIN && v <= INT_MAX)
      return static_cast<int>(v);
  }
  throw config_error(key + ": cannot parse integer '" + value + "'");
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw config_error(key + ": empty list");
  return out;
}

std::string format_int(int v) { return std::to_string(v); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw config_error("write failed: " + path);
}

void deliver(const RunConfig& cfg, const std::string& payload, std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << payload;
    return;
  }
  write_file(cfg.output_path, payload);
  write_file(cfg.output_path + ".config", resolved_config_text(cfg));
}

std::string pick_format(const RunConfig& cfg, const char* preset, bool json_only) {
  std::string f = cfg.output_format.empty() ? preset : cfg.output_format;
  if (f != "csv" && f != "json")
    throw config_error("output.format must be csv or json");
  if (json_only && f == "csv")
    throw config_error(cfg.command + " emits json only");
  return f;
}

void require_valid(const ModelParams& p) {
  ValidationReport rep = validate(p);
  if (!rep.quasi_hermitian) {
    throw validation_error("parameters are not quasi-hermitian",
                           std::move(rep.violated_conditions));
  }
}

json validation_json(const ValidationReport& rep) {
  json o;
  o["quasi_hermitian"] = rep.quasi_hermitian;
  o["positivity_ok"] = rep.positivity_ok;
  o["case_tag"] = to_string(rep.case_tag);
  o["violated_conditions"] = rep.violated_conditions;
  return o;
}

int run_validate(const RunConfig& cfg, std::ostream& out) {
  pick_format(cfg, "json", /*json_only=*/true);
  deliver(cfg, validation_json(validate(cfg.params)).dump(2) + "\n", out);
  return 0;
}

int run_spectrum(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "csv", false);
  if (!cfg.allow_invalid) require_valid(cfg.params);
  const SpectralComparison sc = compare_spectra(cfg.params);
  const std::size_t dim = sc.spectrum_H.eigenvalues.size();

  std::string payload;
  if (fmt == "csv") {
    payload = "index,re_h,im_h,image\n";
    for (std::size_t i = 0; i < dim; ++i) {
      const complex z = sc.spectrum_H.eigenvalues[i];
      const double img = i < sc.spectrum_image.eigenvalues.size()
                             ? sc.spectrum_image.eigenvalues[i].real()
                             : std::numeric_limits<double>::quiet_NaN();
      payload += format_int(static_cast<int>(i)) + "," + format_double(z.real()) +
                 "," + format_double(z.imag()) + "," + format_double(img) + "\n";
    }
  } else {
    json o;
    o["summary"]["params_valid"] = sc.params_valid;
    o["summary"]["max_pairwise_gap"] = sc.max_pairwise_gap;
    o["summary"]["reality_defect"] = sc.reality_defect;
    o["summary"]["h_norm"] = sc.h_norm;
    o["summary"]["image_norm"] = sc.image_norm;
    json levels = json::array();
    for (std::size_t i = 0; i < dim; ++i) {
      json l;
      l["re"] = sc.spectrum_H.eigenvalues[i].real();
      l["im"] = sc.spectrum_H.eigenvalues[i].imag();
      if (i < sc.spectrum_image.eigenvalues.size())
        l["image"] = sc.spectrum_image.eigenvalues[i].real();
      levels.push_back(std::move(l));
    }
    o["eigenvalues"] = std::move(levels);
    payload = o.dump(2) + "\n";
  }
  deliver(cfg, payload, out);
  return 0;
}

int run_metric_check(const RunConfig& cfg, std::ostream& out) {
  pick_format(cfg, "json", /*json_only=*/true);
  require_valid(cfg.params);
  const SpinBosonBasis basis = basis_for(cfg.params);
  const MetricFactors mf = build_metric(cfg.params, basis);
  const ComplexMatrix h = build_H(cfg.params, basis);
  const double residual = pseudo_hermiticity_residual(mf, h);
  const double image_defect = transform(mf, h).hermiticity_defect();

  const EigenSolution sol = solve_eigensystem(cfg.params);
  double gram_defect = 0.0;
  const std::size_t dim = basis.dim();
  for (std::size_t a = 0; a < sol.states.cols(); ++a) {
    for (std::size_t b = 0; b < sol.states.cols(); ++b) {
      complex g(0.0, 0.0);
      for (std::size_t i = 0; i < dim; ++i)
        g += std::conj(sol.states(i, a)) * mf.eta_diag[i] * sol.states(i, b);
      const double target = (a == b) ? 1.0 : 0.0;
      gram_defect = std::max(gram_defect, std::abs(g - complex(target, 0.0)));
    }
  }

  json o;
  o["c_boson"] = mf.c_boson;
  o["c_spin"] = mf.c_spin;
  o["pseudo_hermiticity_residual"] = residual;
  o["image_hermiticity_defect"] = image_defect;
  o["gram_defect"] = gram_defect;
  o["h_norm"] = h.max_norm();
  deliver(cfg, o.dump(2) + "\n", out);
  return 0;
}

int run_exact(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "csv", false);
  const ModelParams& p = cfg.params;
  require_valid(p);

  const bool have_theta = (p.theta1 != 0.0 || p.theta2 != 0.0);
  const BogoliubovReduction red = have_theta ? reduce(p) : trivial_reduction(p);
  if (have_theta) {
    const complex cr = counter_rotating_coefficient(p, red);
    const double scale = std::max(
        {1.0, std::sqrt(std::abs(p.alpha * p.beta)), std::sqrt(std::abs(p.gamma * p.delta))});
    if (std::abs(cr) > 1e-10 * scale) {
      throw validation_error(
          "counter-rotating terms do not cancel; not in the exactly solvable family",
          {"gamma == alpha*Delta/(2*theta2)", "delta == beta*Delta/(2*theta1)",
           "xi3 == xi1 + xi2"});
    }
  }

  const int k_max =
      cfg.k_max.value_or(p.cutoff - static_cast<int>(std::lround(2.0 * p.j)));
  const auto blocks = exact_spectrum(red, p.j, k_max);
  const std::vector<double> exact_levels = flatten_spectrum(blocks);
  if (exact_levels.empty())
    throw config_error("no complete blocks below the cutoff; raise cutoff or k-max");

  const SpinBosonBasis basis = basis_for(p);
  const Spectrum dense =
      diagonalize_hermitian(build_H_image(p, basis), {.with_vectors = false});
  const std::size_t count =
      std::min({static_cast<std::size_t>(std::max(cfg.levels, 0)),
                exact_levels.size(), dense.eigenvalues.size()});

  std::string payload;
  if (fmt == "csv") {
    payload = "index,exact,dense,abs_diff\n";
    for (std::size_t i = 0; i < count; ++i) {
      const double d = dense.eigenvalues[i].real();
      payload += format_int(static_cast<int>(i)) + "," + format_double(exact_levels[i]) +
                 "," + format_double(d) + "," +
                 format_double(std::abs(exact_levels[i] - d)) + "\n";
    }
  } else {
    json o;
    o["reduction"] = {{"phi", red.phi},         {"theta_b", red.theta_b},
                      {"delta", red.delta},     {"omega_k", red.omega_k},
                      {"omega_l", red.omega_l}, {"shift", red.shift}};
    o["k_max"] = k_max;
    json levels = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      levels.push_back(
          {{"exact", exact_levels[i]}, {"dense", dense.eigenvalues[i].real()}});
    }
    o["levels"] = std::move(levels);
    payload = o.dump(2) + "\n";
  }
  deliver(cfg, payload, out);
  return 0;
}

int run_scan(const RunConfig& cfg, std::ostream& out) {
  const std::string fmt = pick_format(cfg, "csv", false);
  if (!cfg.have_sweep) throw config_error("scan needs sweep.* keys");
  SweepSpec sw = cfg.sweep;
  sw.base = cfg.params;
  if (sw.steps < 2) throw config_error("sweep.steps must be at least 2");
  if (!(sw.start < sw.stop)) throw config_error("sweep.start must lie below sweep.stop");
  if (sw.j_list.empty()) throw config_error("sweep.j_list must not be empty");
  if (!std::is_sorted(sw.j_list.begin(), sw.j_list.end()))
    throw config_error("sweep.j_list must be ascending");

  std::vector<ScanRecord> records;
  try {
    records = scan(sw, cfg.convergence);
  } catch (const contract_error& e) {
    throw config_error(e.what());
  }

  std::string payload;
  if (fmt == "csv") {
    payload = scan_csv(records);
  } else {
    json rows = json::array();
    for (const auto& r : records) {
      json o;
      o["coupling"] = r.coupling;
      o["j"] = r.j;
      o["cutoff"] = r.cutoff;
      o["jz_over_j"] = r.jz_over_j;
      o["n_over_j"] = r.n_over_j;
      o["e0_over_j"] = r.e0_over_j;
      o["analytic_jz"] = r.analytic_jz;
      o["analytic_n"] = r.analytic_n;
      o["converged"] = r.converged;
      if (!r.error.empty()) o["error"] = r.error;
      rows.push_back(std::move(o));
    }
    payload = rows.dump(2) + "\n";
  }
  deliver(cfg, payload, out);

  if (!cfg.plot_path.empty()) {
    if (records.size() < 2) throw config_error("plot needs at least 2 records");
    write_file(cfg.plot_path, render_scan_svg(records, sw.param));
  }
  return 0;
}

void emit_error(std::ostream& err, int code, const char* kind, const std::string& msg,
                const std::vector<std::string>& conditions = {}) {
  json e;
  e["error"]["code"] = code;
  e["error"]["kind"] = kind;
  e["error"]["message"] = msg;
  if (!conditions.empty()) e["error"]["conditions"] = conditions;
  err << e.dump() << "\n";
}

}  // namespace

KeyValues parse_config_text(const std::string& text) {
  KeyValues kvs;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("config line " + std::to_string(line_no) +
                         ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw config_error("config line " + std::to_string(line_no) + ": empty key");
    }
    kvs.emplace_back(key, value);
  }
  return kvs;
}

void apply_config(RunConfig& cfg, const std::string& key, const std::string& value) {
  ModelParams& p = cfg.params;
  if (key == "omega") p.omega = parse_double(key, value);
  else if (key == "omega0") p.omega0 = parse_double(key, value);
  else if (key == "theta1") p.theta1 = parse_double(key, value);
  else if (key == "theta2") p.theta2 = parse_double(key, value);
  else if (key == "alpha") p.alpha = parse_double(key, value);
  else if (key == "beta") p.beta = parse_double(key, value);
  else if (key == "gamma") p.gamma = parse_double(key, value);
  else if (key == "delta") p.delta = parse_double(key, value);
  else if (key == "xi1") p.xi1 = parse_double(key, value);
  else if (key == "xi2") p.xi2 = parse_double(key, value);
  else if (key == "xi3") p.xi3 = parse_double(key, value);
  else if (key == "j") p.j = parse_double(key, value);
  else if (key == "cutoff") p.cutoff = parse_int(key, value);
  else if (key == "sweep.param") { cfg.sweep.param = value; cfg.have_sweep = true; }
  else if (key == "sweep.start") { cfg.sweep.start = parse_double(key, value); cfg.have_sweep = true; }
  else if (key == "sweep.stop") { cfg.sweep.stop = parse_double(key, value); cfg.have_sweep = true; }
  else if (key == "sweep.steps") { cfg.sweep.steps = parse_int(key, value); cfg.have_sweep = true; }
  else if (key == "sweep.j_list") { cfg.sweep.j_list = parse_double_list(key, value); cfg.have_sweep = true; }
  else if (key == "output.path") cfg.output_path = value;
  else if (key == "output.format") cfg.output_format = value;
  else if (key == "plot.path") cfg.plot_path = value;
  else throw config_error("unknown config key: " + key);
}

std::string resolved_config_text(const RunConfig& cfg) {
  const ModelParams& p = cfg.params;
  std::string out;
  auto kv = [&out](const char* k, const std::string& v) {
    out += k;
    out += " = ";
    out += v;
    out += "\n";
  };
  kv("omega", format_double(p.omega));
  kv("omega0", format_double(p.omega0));
  kv("theta1", format_double(p.theta1));
  kv("theta2", format_double(p.theta2));
  kv("alpha", format_double(p.alpha));
  kv("beta", format_double(p.beta));
  kv("gamma", format_double(p.gamma));
  kv("delta", format_double(p.delta));
  kv("xi1", format_double(p.xi1));
  kv("xi2", format_double(p.xi2));
  kv("xi3", format_double(p.xi3));
  kv("j", format_double(p.j));
  kv("cutoff", format_int(p.cutoff));
  if (cfg.have_sweep) {
    kv("sweep.param", cfg.sweep.param);
    kv("sweep.start", format_double(cfg.sweep.start));
    kv("sweep.stop", format_double(cfg.sweep.stop));
    kv("sweep.steps", format_int(cfg.sweep.steps));
    std::string list;
    for (double j : cfg.sweep.j_list) {
      if (!list.empty()) list += ",";
      list += format_double(j);
    }
    kv("sweep.j_list", list);
  }
  if (!cfg.output_path.empty()) kv("output.path", cfg.output_path);
  if (!cfg.output_format.empty()) kv("output.format", cfg.output_format);
  if (!cfg.plot_path.empty()) kv("plot.path", cfg.plot_path);
  return out;
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
  std::string out =
      "coupling,j,cutoff,jz_over_j,n_over_j,e0_over_j,analytic_jz,analytic_n,converged\n";
  for (const auto& r : records) {
    out += format_double(r.coupling);
    out += ',';
    out += format_double(r.j);
    out += ',';
    out += format_int(r.cutoff);
    out += ',';
    out += format_double(r.jz_over_j);
    out += ',';
    out += format_double(r.n_over_j);
    out += ',';
    out += format_double(r.e0_over_j);
    out += ',';
    out += format_double(r.analytic_jz);
    out += ',';
    out += format_double(r.analytic_n);
    out += ',';
    out += r.converged ? "true" : "false";
    out += '\n';
  }
  return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "validate") return run_validate(cfg, out);
    if (cfg.command == "spectrum") return run_spectrum(cfg, out);
    if (cfg.command == "metric-check") return run_metric_check(cfg, out);
    if (cfg.command == "exact") return run_exact(cfg, out);
    if (cfg.command == "scan") return run_scan(cfg, out);
    throw config_error("unknown command: " + cfg.command);
  } catch (const config_error& e) {
    emit_error(err, 2, "config", e.what());
    return 2;
  } catch (const validation_error& e) {
    emit_error(err, 3, "validation", e.what(), e.conditions);
    return 3;
  } catch (const contract_error& e) {
    emit_error(err, 2, "config", e.what());
    return 2;
  } catch (const numerical_error& e) {
    emit_error(err, 4, "numerical", e.what());
    return 4;
  } catch (const std::exception& e) {
    emit_error(err, 4, "internal", e.what());
    return 4;
  }
}

}  // namespace pdicke
