#pragma once

#include <iosfwd>
#include <optional>

#include "pdicke/qpt.hpp"

namespace pdicke {

// Bad run configuration (unknown key, malformed value, missing piece).
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // validate | spectrum | metric-check | exact | scan
  ModelParams params;
  SweepSpec sweep;  // .base is filled from params at dispatch time
  bool have_sweep = false;
  ConvergenceSettings convergence;
  std::string output_path;    // empty: standard output
  std::string output_format;  // csv | json; empty picks the command default
  std::string plot_path;
  bool allow_invalid = false;  // spectrum: diagnostic mode for invalid params
  int levels = 20;             // exact: table length
  std::optional<int> k_max;    // exact: block cap, default cutoff - 2j
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

// `key = value` lines, # comments. Throws config_error with the line number.
KeyValues parse_config_text(const std::string& text);
// Single-key application; flags reuse this so file and flag parsing agree.
void apply_config(RunConfig& cfg, const std::string& key, const std::string& value);
// Full key=value dump; re-running from it reproduces the outputs.
std::string resolved_config_text(const RunConfig& cfg);

// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

std::string scan_csv(const std::vector<ScanRecord>& records);
// Two-panel order-parameter plot: one polyline per j plus the analytic curve.
std::string render_scan_svg(const std::vector<ScanRecord>& records,
                            const std::string& param_name);

// Dispatches the configured command. Returns the process exit code:
// 0 ok, 2 config, 3 validation, 4 numerical; errors also land on `err`
// as one JSON object.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace pdicke
