#include "aqw/run.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "aqw/analysis.hpp"
#include "aqw/anyon_model.hpp"
#include "aqw/bracket.hpp"
#include "aqw/circulant_walk.hpp"
#include "aqw/exact_walk.hpp"
#include "aqw/moments.hpp"
#include "aqw/reference_walks.hpp"

namespace aqw {
namespace {

using nlohmann::json;

int parse_level(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity") return kLevelInfinity;
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("level must be a positive integer or 'inf', got '" + text + "'");
  }
  if (used != text.size()) {
    throw std::invalid_argument("level must be a positive integer or 'inf', got '" + text + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

json config_to_json(const RunConfig& c) {
  json j;
  j["artifact"] = "aqw";
  j["version"] = kArtifactVersion;
  json cfg;
  cfg["mode"] = c.mode;
  cfg["level"] = c.level;
  cfg["steps"] = c.steps;
  if (c.s0) cfg["s0"] = *c.s0;
  if (c.sites) cfg["sites"] = *c.sites;
  cfg["moment_mode"] = c.moment_mode;
  cfg["regularize"] = c.regularize;
  cfg["provider"] = c.provider;
  if (c.mode == "disorder") {
    cfg["phase"] = c.phase;
    cfg["fill_p"] = c.fill_p;
    if (c.fill_fixed) cfg["fill_fixed"] = *c.fill_fixed;
    cfg["seeds"] = c.seeds;
    cfg["seed"] = c.seed;
  }
  j["config"] = cfg;
  return j;
}

void write_variance_csv(const std::string& path, const RunConfig& config,
                        const std::vector<int>& iterations, const std::vector<double>& scaled,
                        const std::vector<double>& raw) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << "# " << config_to_json(config).dump() << "\n";
  out << "t,sigma2_scaled,sigma2_raw\n";
  for (std::size_t i = 0; i < iterations.size(); ++i) {
    out << iterations[i] << ',' << format_double(scaled[i]) << ',' << format_double(raw[i])
        << "\n";
  }
}

void write_distribution_csv(const std::string& path, const RunConfig& config, int iteration,
                            const SiteDistribution& dist) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << "# " << config_to_json(config).dump() << "\n";
  out << "t,s,shat,p\n";
  for (std::size_t s = 0; s < dist.p.size(); ++s) {
    const double shat = (static_cast<double>(s) - dist.s0) / 2.0;
    out << iteration << ',' << s << ',' << format_double(shat) << ','
        << format_double(dist.p[s]) << "\n";
  }
}

struct SeriesResult {
  std::vector<int> iterations;
  std::vector<double> scaled;
  std::vector<double> raw;
  SiteDistribution final_distribution;
};

SeriesResult series_from_trace(const WalkTrace& trace) {
  SeriesResult r;
  for (const WalkRecord& rec : trace.records) {
    r.iterations.push_back(rec.iteration);
    r.scaled.push_back(rec.sigma2_scaled);
    r.raw.push_back(rec.sigma2_raw);
  }
  r.final_distribution = trace.distribution(trace.records.size() - 1);
  return r;
}

SeriesResult simulate_series(const RunConfig& config) {
  const int t = config.steps;
  if (t < 0) throw std::invalid_argument("steps must be >= 0");
  const int n = config.sites.value_or(4 * t + 1);
  const int s0 = config.s0.value_or(n / 2);

  if (config.mode == "exact") {
    const AnyonModel model = make_model(parse_level(config.level));
    const CoinCoefficients coins = coin_coefficients();
    if (config.provider == "oracle") {
      OracleMomentProvider provider(model);
      return series_from_trace(evolve(s0, t, provider, coins, n));
    }
    if (config.provider != "table") {
      throw std::invalid_argument("provider must be 'table' or 'oracle'");
    }
    TableMomentProvider provider(model);
    return series_from_trace(evolve(s0, t, provider, coins, n));
  }
  if (config.mode == "circulant") {
    const AnyonModel model = make_model(parse_level(config.level));
    const MomentAveraging averaging = config.moment_mode == "finite"
                                          ? MomentAveraging::kFiniteN
                                          : MomentAveraging::kAsymptotic;
    if (config.moment_mode != "finite" && config.moment_mode != "asymptotic") {
      throw std::invalid_argument("moment-mode must be 'finite' or 'asymptotic'");
    }
    // the averaged factor needs at least the shortest averaging ring
    const int ring = config.sites.value_or(std::max(4 * t + 1, 9));
    const FourierFactor factor = build_fourier_factor(model, ring, averaging, config.regularize);
    return series_from_trace(evolve_circulant(config.s0.value_or(ring / 2), t, factor));
  }
  if (config.mode == "closed-form") {
    parse_level(config.level);  // the closed form itself is the k = 2 one
    SeriesResult r;
    for (int it = 0; it <= t; ++it) {
      SiteDistribution dist = ising_distribution(it, s0, n);
      const double raw = raw_site_variance(dist.p);
      r.iterations.push_back(it);
      r.raw.push_back(raw);
      r.scaled.push_back(kScaledVariancePerStep * raw);
      if (it == t) r.final_distribution = std::move(dist);
    }
    return r;
  }
  if (config.mode == "rw") {
    SeriesResult r;
    for (int it = 0; it <= t; ++it) {
      SiteDistribution dist = classical_rw(it);
      const double raw = raw_site_variance(dist.p);
      r.iterations.push_back(it);
      r.raw.push_back(raw);
      r.scaled.push_back(kScaledVariancePerStep * raw);
      if (it == t) r.final_distribution = std::move(dist);
    }
    return r;
  }
  if (config.mode == "qw") {
    SeriesResult r;
    for (int it = 0; it <= t; ++it) {
      SiteDistribution dist = coherent_hadamard_qw(it);
      const double raw = raw_site_variance(dist.p);
      r.iterations.push_back(it);
      r.raw.push_back(raw);
      r.scaled.push_back(kScaledVariancePerStep * raw);
      if (it == t) r.final_distribution = std::move(dist);
    }
    return r;
  }
  if (config.mode == "disorder") {
    if (config.seeds < 1) throw std::invalid_argument("seeds must be >= 1");
    SeriesResult r;
    std::vector<double> mean_p;
    for (int i = 0; i < config.seeds; ++i) {
      DisorderConfig dc;
      dc.phase = config.phase;
      dc.fill_probability = config.fill_p;
      dc.fixed_filling = config.fill_fixed;
      dc.seed = config.seed + static_cast<std::uint64_t>(i);
      const WalkTrace trace = abelian_disorder_evolve(s0, t, dc, n);
      if (i == 0) {
        r = series_from_trace(trace);
        mean_p = trace.records.back().site_probability;
      } else {
        for (std::size_t j = 0; j < r.raw.size(); ++j) {
          r.raw[j] += trace.records[j].sigma2_raw;
          r.scaled[j] += trace.records[j].sigma2_scaled;
        }
        const std::vector<double>& p = trace.records.back().site_probability;
        for (std::size_t j = 0; j < mean_p.size(); ++j) mean_p[j] += p[j];
      }
    }
    // Seed-averaged variance of the ensemble members, and the mean final
    // distribution for the emitted file.
    for (std::size_t j = 0; j < r.raw.size(); ++j) {
      r.raw[j] /= config.seeds;
      r.scaled[j] /= config.seeds;
    }
    for (double& v : mean_p) v /= config.seeds;
    r.final_distribution.p = std::move(mean_p);
    return r;
  }
  throw std::invalid_argument("unknown mode '" + config.mode + "'");
}

int classify_failure(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << "\n";
  if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) return 2;
  return 1;
}

}  // namespace

std::string config_json(const RunConfig& config) { return config_to_json(config).dump(); }

int run_simulate(const RunConfig& config, std::ostream& err) {
  try {
    const SeriesResult series = simulate_series(config);
    write_variance_csv(config.out, config, series.iterations, series.scaled, series.raw);
    if (!config.emit_distributions.empty()) {
      write_distribution_csv(config.emit_distributions, config, config.steps,
                             series.final_distribution);
    }
    return 0;
  } catch (const std::exception& e) {
    return classify_failure(e, err);
  }
}

int run_sweep(const std::vector<std::string>& levels, const RunConfig& base,
              const std::string& out, std::ostream& err) {
  if (levels.empty()) {
    err << "error: sweep needs at least one level\n";
    return 2;
  }
  try {
    struct LevelRun {
      std::string level;
      RunConfig config;
      SeriesResult series;
    };
    std::vector<LevelRun> runs(levels.size());
    std::vector<std::future<SeriesResult>> futures;
    for (std::size_t i = 0; i < levels.size(); ++i) {
      runs[i].level = levels[i];
      runs[i].config = base;
      runs[i].config.level = levels[i];
      parse_level(levels[i]);  // validate before launching
      futures.push_back(std::async(std::launch::async,
                                   [config = runs[i].config] { return simulate_series(config); }));
    }
    for (std::size_t i = 0; i < levels.size(); ++i) runs[i].series = futures[i].get();

    const std::filesystem::path combined(out);
    for (const LevelRun& run : runs) {
      // Per-level file written atomically: temp file then rename.
      std::filesystem::path per_level = combined.parent_path() /
                                        (combined.stem().string() + "_k" + run.level + ".csv");
      std::filesystem::path tmp = per_level;
      tmp += ".tmp";
      write_variance_csv(tmp.string(), run.config, run.series.iterations, run.series.scaled,
                         run.series.raw);
      std::filesystem::rename(tmp, per_level);
    }

    std::ofstream combined_out(out);
    if (!combined_out) throw std::runtime_error("cannot open output file " + out);
    RunConfig header = base;
    header.level = "sweep";
    combined_out << "# " << config_json(header) << "\n";
    combined_out << "level,t,sigma2_scaled,sigma2_raw\n";
    for (const LevelRun& run : runs) {
      for (std::size_t i = 0; i < run.series.iterations.size(); ++i) {
        combined_out << run.level << ',' << run.series.iterations[i] << ','
                     << format_double(run.series.scaled[i]) << ','
                     << format_double(run.series.raw[i]) << "\n";
      }
    }
    return 0;
  } catch (const std::exception& e) {
    return classify_failure(e, err);
  }
}

int run_verify_table(const std::vector<std::string>& levels, std::ostream& out,
                     std::ostream& err) {
  try {
    if (levels.empty()) {
      err << "error: verify-table needs at least one level\n";
      return 2;
    }
    constexpr double kTolerance = 1e-10;
    double worst = 0.0;
    out << "family,delta,k,oracle_re,oracle_im,table_re,table_im,abs_diff\n";
    for (const std::string& level_text : levels) {
      const AnyonModel model = make_model(parse_level(level_text));
      const OracleMomentProvider oracle(model);
      for (MomentFamily family : kAllMomentFamilies) {
        for (int delta = -6; delta <= 6; ++delta) {
          const std::complex<double> o = oracle.moment_at_offset(family, delta);
          const std::complex<double> t = table_moment(family, delta, model);
          const double diff = std::abs(o - t);
          worst = std::max(worst, diff);
          out << to_string(family) << ',' << delta << ',' << level_text << ','
              << format_double(o.real()) << ',' << format_double(o.imag()) << ','
              << format_double(t.real()) << ',' << format_double(t.imag()) << ','
              << format_double(diff) << "\n";
        }
      }
    }
    out << "# max_abs_diff=" << format_double(worst) << " tolerance=" << kTolerance << "\n";
    if (worst > kTolerance) {
      err << "error: oracle-table mismatch " << worst << " exceeds " << kTolerance << "\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    return classify_failure(e, err);
  }
}

int run_fit(const std::string& input, double window_begin, double window_end, bool with_offset,
            std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file " + input);
    std::vector<double> ts, ys;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line[0] == 't' || line[0] == 'l') continue;
      std::istringstream row(line);
      std::string cell;
      std::vector<double> cells;
      while (std::getline(row, cell, ',')) cells.push_back(std::stod(cell));
      if (cells.size() < 2) continue;
      ts.push_back(cells[0]);
      ys.push_back(cells[1]);  // sigma2_scaled column
    }
    const VarianceFit fit = fit_quadratic(ts, ys, window_begin, window_end, with_offset);
    json j;
    j["K2"] = fit.k2;
    j["K3"] = fit.k3;
    if (with_offset) j["offset"] = fit.offset;
    j["residual"] = fit.rms_residual;
    j["window"] = {window_begin, window_end};
    out << j.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    return classify_failure(e, err);
  }
}

int run_dump_moments(const std::string& level, int ring_size, std::ostream& out,
                     std::ostream& err) {
  try {
    const AnyonModel model = make_model(parse_level(level));
    json j;
    j["artifact"] = "aqw";
    j["version"] = kArtifactVersion;
    j["level"] = level;
    j["kauffman_a"] = {model.kauffman_a.real(), model.kauffman_a.imag()};
    j["quantum_dimension"] = model.quantum_dimension;

    json table;
    for (MomentFamily family : kAllMomentFamilies) {
      json entries;
      for (int delta = -6; delta <= 6; ++delta) {
        const std::complex<double> v = table_moment(family, delta, model);
        entries[std::to_string(delta)] = {v.real(), v.imag()};
      }
      table[to_string(family)] = entries;
    }
    j["table"] = table;

    json averaged;
    averaged["n"] = ring_size;
    for (BandPair pair : kAllBandPairs) {
      const std::complex<double> v = averaged_moment(pair, ring_size, model);
      averaged[to_string(pair)] = {v.real(), v.imag()};
    }
    j["averaged"] = averaged;

    const KappaPair fin = kappas_finite(model, ring_size);
    const KappaPair asym = kappas_asymptotic(model);
    j["kappas"] = {
        {"finite_n",
         {{"n", ring_size}, {"kappa1", fin.kappa1}, {"kappa2", {fin.kappa2.real(), fin.kappa2.imag()}}}},
        {"asymptotic",
         {{"kappa1", asym.kappa1}, {"kappa2", {asym.kappa2.real(), asym.kappa2.imag()}}}},
    };
    out << j.dump(2) << "\n";
    return 0;
  } catch (const std::exception& e) {
    return classify_failure(e, err);
  }
}

}  // namespace aqw
