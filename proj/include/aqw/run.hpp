#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aqw {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Everything a `simulate` invocation needs; serialized verbatim into every
/// output file header so runs can be reproduced from their artifacts.
struct RunConfig {
  std::string mode = "exact";  // exact|circulant|closed-form|rw|qw|disorder
  std::string level = "2";     // positive integer or "inf"
  int steps = 10;
  std::optional<int> s0;
  std::optional<int> sites;
  std::string moment_mode = "asymptotic";  // finite|asymptotic (circulant)
  double regularize = 0.0;
  std::string provider = "table";  // table|oracle (exact mode)
  double phase = 1.5707963267948966;  // disorder: exchange phase, radians
  double fill_p = 0.5;
  std::optional<int> fill_fixed;
  int seeds = 1;
  std::uint64_t seed = 0;
  std::string out = "variance.csv";
  std::string emit_distributions;  // path for the final-iteration distribution
};

std::string config_json(const RunConfig& config);

/// Exit codes: 0 success, 1 internal validation failure (trace drift,
/// singular normalization), 2 invalid configuration.
int run_simulate(const RunConfig& config, std::ostream& err);

/// One variance series per level, combined into `out` plus one atomically
/// written per-level file next to it. Levels run concurrently.
int run_sweep(const std::vector<std::string>& levels, const RunConfig& base,
              const std::string& out, std::ostream& err);

/// Oracle-vs-table comparison over the given levels and offsets [-6, 6];
/// prints one row per (family, offset, level) and fails if any |difference|
/// exceeds 1e-10.
int run_verify_table(const std::vector<std::string>& levels, std::ostream& out,
                     std::ostream& err);

/// Fits sigma2 = K2 t^2 + K3 t (optionally + offset) to the named columns of
/// a variance CSV and prints the result as JSON.
int run_fit(const std::string& input, double window_begin, double window_end, bool with_offset,
            std::ostream& out, std::ostream& err);

/// JSON dump of the closed-form moments, band averages and kappas at a level.
int run_dump_moments(const std::string& level, int ring_size, std::ostream& out,
                     std::ostream& err);

}  // namespace aqw
