#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "aqw/run.hpp"

namespace {

std::vector<std::string> split_levels(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

bool parse_window(const std::string& text, double& begin, double& end) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    begin = std::stod(text.substr(0, colon));
    end = std::stod(text.substr(colon + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(2)_k anyonic V^2 quantum walk simulator"};
  app.require_subcommand(1);

  aqw::RunConfig config;
  std::string levels_text = "1,2,3,4,5,10";
  std::string window_text = "1:100";
  std::string fit_input;
  bool with_offset = false;
  int dump_sites = 64;
  std::string sweep_out = "sweep.csv";
  int fill_fixed = -1;
  int s0 = -1;
  int sites = 0;

  CLI::App* simulate = app.add_subcommand("simulate", "run one walk and write variance CSV");
  simulate->add_option("--mode", config.mode,
                       "exact|circulant|closed-form|rw|qw|disorder")->capture_default_str();
  simulate->add_option("--level", config.level, "anyon level k, or 'inf'")->capture_default_str();
  simulate->add_option("--steps", config.steps, "superoperator iterations")->capture_default_str();
  simulate->add_option("--s0", s0, "start site (default: ring center)");
  simulate->add_option("--sites", sites, "ring size (default 4t+1)");
  simulate->add_option("--moment-mode", config.moment_mode,
                       "circulant averaging: finite|asymptotic")->capture_default_str();
  simulate->add_option("--regularize", config.regularize,
                       "Tikhonov epsilon for a singular normalization");
  simulate->add_option("--provider", config.provider, "exact-mode moments: table|oracle")
      ->capture_default_str();
  simulate->add_option("--phase", config.phase, "disorder exchange phase (radians)");
  simulate->add_option("--fill-p", config.fill_p, "disorder Bernoulli filling probability");
  simulate->add_option("--fill-fixed", fill_fixed, "fixed occupation per island");
  simulate->add_option("--seeds", config.seeds, "number of disorder seeds to average");
  simulate->add_option("--seed", config.seed, "base RNG seed");
  simulate->add_option("--out", config.out, "variance CSV path")->capture_default_str();
  simulate->add_option("--emit-distributions", config.emit_distributions,
                       "write the final-iteration site distribution CSV here");

  CLI::App* sweep = app.add_subcommand("sweep", "one variance series per level");
  sweep->add_option("--levels", levels_text, "comma-separated levels, e.g. 1,2,3,inf");
  sweep->add_option("--steps", config.steps, "superoperator iterations")->capture_default_str();
  sweep->add_option("--mode", config.mode, "exact|circulant|closed-form")->capture_default_str();
  sweep->add_option("--out", sweep_out, "combined CSV path")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify-table", "oracle vs closed-form moment table");
  verify->add_option("--levels", levels_text, "comma-separated levels")->capture_default_str();

  CLI::App* fit = app.add_subcommand("fit", "fit sigma2 = K2 t^2 + K3 t to a variance CSV");
  fit->add_option("--input", fit_input, "variance CSV")->required();
  fit->add_option("--window", window_text, "t window a:b")->capture_default_str();
  fit->add_flag("--with-offset", with_offset, "include a constant term");

  CLI::App* dump = app.add_subcommand("dump-moments", "JSON dump of moments and kappas");
  dump->add_option("--level", config.level, "anyon level k, or 'inf'")->capture_default_str();
  dump->add_option("--sites", dump_sites, "ring size for the finite-N averages")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (s0 >= 0) config.s0 = s0;
  if (sites > 0) config.sites = sites;
  if (fill_fixed >= 0) config.fill_fixed = fill_fixed;

  if (simulate->parsed()) return aqw::run_simulate(config, std::cerr);
  if (sweep->parsed()) {
    return aqw::run_sweep(split_levels(levels_text), config, sweep_out, std::cerr);
  }
  if (verify->parsed()) {
    return aqw::run_verify_table(split_levels(levels_text), std::cout, std::cerr);
  }
  if (fit->parsed()) {
    double begin = 0.0, end = 0.0;
    if (!parse_window(window_text, begin, end)) {
      std::cerr << "error: window must look like a:b\n";
      return 2;
    }
    return aqw::run_fit(fit_input, begin, end, with_offset, std::cout, std::cerr);
  }
  if (dump->parsed()) {
    return aqw::run_dump_moments(config.level, dump_sites, std::cout, std::cerr);
  }
  return 2;
}
