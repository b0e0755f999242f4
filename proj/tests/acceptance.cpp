// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "aqw/analysis.hpp"
#include "aqw/anyon_model.hpp"
#include "aqw/circulant_walk.hpp"
#include "aqw/exact_walk.hpp"
#include "aqw/moments.hpp"
#include "aqw/reference_walks.hpp"

using namespace aqw;
using complexd = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& name, const Outcome& outcome) {
  std::printf("[%s] %2d. %-22s %s\n", outcome.pass ? "PASS" : "FAIL", number, name.c_str(),
              outcome.detail.c_str());
  std::fflush(stdout);
  if (!outcome.pass) ++failures;
}

std::string fmt(const char* pattern, ...) {
  char buffer[512];
  va_list args;
  va_start(args, pattern);
  std::vsnprintf(buffer, sizeof(buffer), pattern, args);
  va_end(args);
  return buffer;
}

// A full t=100 exact run with per-step trace and Hermiticity bookkeeping.
struct CheckedRun {
  WalkTrace trace;
  double max_trace_dev = 0.0;
  double max_herm_err = 0.0;
};

CheckedRun checked_run(const MomentProvider& provider, int iterations) {
  const int n = 4 * iterations + 1, s0 = 2 * iterations;
  const CoinCoefficients coins = coin_coefficients();
  CheckedRun run;
  run.trace.s0 = s0;
  run.trace.ring_size = n;
  SpatialDensityMatrix rho = SpatialDensityMatrix::localized(n, s0);
  const auto record = [&](int it) {
    WalkRecord rec;
    rec.iteration = it;
    rec.site_probability = rho.diagonal_distribution();
    rec.sigma2_raw = raw_site_variance(rec.site_probability);
    rec.sigma2_scaled = kScaledVariancePerStep * rec.sigma2_raw;
    run.trace.records.push_back(std::move(rec));
  };
  record(0);
  for (int it = 1; it <= iterations; ++it) {
    rho = apply_step(rho, provider, coins);
    run.max_trace_dev = std::max(run.max_trace_dev, rho.trace_deviation());
    run.max_herm_err = std::max(run.max_herm_err, rho.hermiticity_error());
    record(it);
  }
  return run;
}

}  // namespace

int main() {
  constexpr int kIterations = 100;
  const std::vector<int> levels = {1, 2, 3, 5, kLevelInfinity};

  // Shared t=100 exact runs (criteria 2, 3, 4, 6, 8).
  std::vector<CheckedRun> runs;
  for (int k : levels) {
    const TableMomentProvider provider(make_model(k));
    runs.push_back(checked_run(provider, kIterations));
  }
  const CheckedRun& run_k1 = runs[0];
  const CheckedRun& run_k2 = runs[1];
  const CheckedRun& run_k3 = runs[2];
  const CheckedRun& run_inf = runs[4];

  // 1. Table fidelity ------------------------------------------------------
  {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int k : {1, 2, 3, 4, 5, 10}) {
      const AnyonModel model = make_model(k);
      const OracleMomentProvider oracle(model);
      for (MomentFamily family : kAllMomentFamilies) {
        for (int delta = -6; delta <= 6; ++delta) {
          worst = std::max(worst, std::abs(oracle.moment_at_offset(family, delta) -
                                           table_moment(family, delta, model)));
        }
      }
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = worst <= 1e-10 && elapsed < 10.0;
    o.detail = fmt("max |oracle - table| = %.3e (tol 1e-10), %.2f s (limit 10 s)", worst, elapsed);
    report(1, "table fidelity", o);
  }

  // 2. Abelian triviality --------------------------------------------------
  {
    const AnyonModel k1 = make_model(1);
    bool exact_ones = true;
    for (MomentFamily family : kAllMomentFamilies) {
      for (int delta = -6; delta <= 6; ++delta) {
        const complexd v = table_moment(family, delta, k1);
        exact_ones = exact_ones && v.real() == 1.0 && v.imag() == 0.0;
      }
    }
    // element-wise density-matrix comparison of the k=1 and unit-moment runs
    const int n = 4 * kIterations + 1, s0 = 2 * kIterations;
    const TableMomentProvider table_provider(k1);
    const AbelianPhaseMomentProvider unit_provider(std::vector<double>(n, 0.0));
    const CoinCoefficients coins = coin_coefficients();
    SpatialDensityMatrix a = SpatialDensityMatrix::localized(n, s0);
    SpatialDensityMatrix b = SpatialDensityMatrix::localized(n, s0);
    double max_diff = 0.0;
    for (int it = 1; it <= kIterations; ++it) {
      a = apply_step(a, table_provider, coins);
      b = apply_step(b, unit_provider, coins);
      max_diff = std::max(max_diff, (a.rho - b.rho).cwiseAbs().maxCoeff());
    }
    Outcome o;
    o.pass = exact_ones && max_diff <= 1e-12;
    o.detail = fmt("k=1 moments exactly 1: %s; max |rho_k1 - rho_trivial| = %.3e (tol 1e-12)",
                   exact_ones ? "yes" : "NO", max_diff);
    report(2, "abelian triviality", o);
  }

  // 3. k=1 variance fit ----------------------------------------------------
  {
    // Walk-step time axis (two steps per iteration), raw site variance.
    std::vector<double> t, y;
    for (const WalkRecord& rec : run_k1.trace.records) {
      if (rec.iteration == 0) continue;
      t.push_back(2.0 * rec.iteration);
      y.push_back(rec.sigma2_raw);
    }
    const VarianceFit fit = fit_quadratic(t, y, 2, 200);
    Outcome o;
    o.pass = std::abs(fit.k2 - 0.125) <= 0.005 && std::abs(fit.k3 - 0.75) <= 0.05;
    o.detail = fmt("K2 = %.6f (0.125 +- 0.005), K3 = %.6f (0.75 +- 0.05), rms %.2e", fit.k2,
                   fit.k3, fit.rms_residual);
    report(3, "k=1 variance fit", o);
  }

  // 4. Ising exactness -----------------------------------------------------
  {
    double worst = 0.0;
    for (const WalkRecord& rec : run_k2.trace.records) {
      worst = std::max(worst, std::abs(rec.sigma2_scaled - rec.iteration));
    }
    Outcome o;
    o.pass = worst <= 1e-8;
    o.detail = fmt("max |sigma2_scaled(t) - t| = %.3e over t <= 100 (tol 1e-8)", worst);
    report(4, "ising exactness", o);
  }

  // 5. Closed-form match ---------------------------------------------------
  {
    const int n = 4 * kIterations + 1, s0 = 2 * kIterations;
    const FourierFactor factor =
        build_fourier_factor(make_model(2), n, MomentAveraging::kAsymptotic);
    const WalkTrace circulant = evolve_circulant(s0, kIterations, factor);
    double worst_pointwise = 0.0;
    for (const WalkRecord& rec : circulant.records) {
      for (int s = 0; s < n; ++s) {
        worst_pointwise = std::max(worst_pointwise, std::abs(rec.site_probability[s] -
                                                             ising_closed_form(s, rec.iteration, s0)));
      }
    }
    double worst_variance = 0.0;
    for (int it = 0; it <= kIterations; ++it) {
      const double v = scaled_variance(ising_distribution(it, s0, n));
      worst_variance = std::max(worst_variance, std::abs(v - it));
    }
    Outcome o;
    o.pass = worst_pointwise <= 1e-10 && worst_variance <= 1e-10;
    o.detail = fmt("max pointwise diff = %.3e (tol 1e-10); max |var - t| = %.3e", worst_pointwise,
                   worst_variance);
    report(5, "closed-form match", o);
  }

  // 6. Slope reproduction --------------------------------------------------
  {
    const auto window_slope = [](const WalkTrace& trace) {
      std::vector<double> t, y;
      for (const WalkRecord& rec : trace.records) {
        if (rec.iteration == 0) continue;
        t.push_back(rec.iteration);
        y.push_back(rec.sigma2_scaled);
      }
      return fit_quadratic(t, y, 51, 100).k3;
    };
    const double slope_k3 = window_slope(run_k3.trace);
    const double slope_inf = window_slope(run_inf.trace);
    Outcome o;
    o.pass = std::abs(slope_k3 - 0.9877) <= 0.03 && std::abs(slope_inf - 1.0665) <= 0.03 &&
             slope_k3 < 1.0 && 1.0 < slope_inf;
    o.detail = fmt("slope k=3: %.4f (0.9877 +- 0.03), k=inf: %.4f (1.0665 +- 0.03)", slope_k3,
                   slope_inf);
    report(6, "slope reproduction", o);
  }

  // 7. kappa identities ----------------------------------------------------
  {
    const KappaPair k2 = kappas_asymptotic(make_model(2));
    const KappaPair k4 = kappas_asymptotic(make_model(4));
    const KappaPair inf = kappas_asymptotic(make_model(kLevelInfinity));
    bool pass = std::abs(k2.kappa2) <= 1e-12 && std::abs(k4.kappa2) <= 1e-12 &&
                std::abs(k2.kappa1 - 0.125) <= 1e-12 && std::abs(inf.kappa1 - 0.53125) <= 1e-12;

    double worst_decay = 0.0;
    double smallest_leading = 1e300;
    for (int k : {2, 3, 5}) {
      const AnyonModel model = make_model(k);
      const KappaPair asym = kappas_asymptotic(model);
      double prev1 = -1.0, prev2 = -1.0;
      for (int n : {64, 128, 256, 512}) {
        const KappaPair fin = kappas_finite(model, n);
        const double e1 = std::abs(fin.kappa1 - asym.kappa1) * n;
        const double e2 = std::abs(fin.kappa2 - asym.kappa2) * n;
        if (prev1 >= 0.0) {
          worst_decay = std::max({worst_decay, std::abs(e1 - prev1), std::abs(e2 - prev2)});
        }
        prev1 = e1;
        prev2 = e2;
        smallest_leading = std::min({smallest_leading, e1, e2});
      }
    }
    pass = pass && worst_decay <= 1e-9 && smallest_leading > 1e-4;
    Outcome o;
    o.pass = pass;
    o.detail = fmt("kappa2(k=2,4) = %.1e, %.1e; kappa1(2) = %.12f, kappa1(inf) = %.12f; "
                   "N*err spread %.1e",
                   std::abs(k2.kappa2), std::abs(k4.kappa2), k2.kappa1, inf.kappa1, worst_decay);
    report(7, "kappa identities", o);
  }

  // 8. CP-map sanity -------------------------------------------------------
  {
    double worst_trace = 0.0, worst_herm = 0.0;
    for (const CheckedRun& run : runs) {
      worst_trace = std::max(worst_trace, run.max_trace_dev);
      worst_herm = std::max(worst_herm, run.max_herm_err);
    }

    double worst_eig = 0.0;
    for (int k : levels) {
      const TableMomentProvider provider(make_model(k));
      const CoinCoefficients coins = coin_coefficients();
      SpatialDensityMatrix rho = SpatialDensityMatrix::localized(41, 20);
      for (int it = 0; it < 10; ++it) {
        rho = apply_step(rho, provider, coins);
        worst_eig = std::min(worst_eig, rho.min_eigenvalue());
      }
    }

    double worst_diag = 0.0, worst_mag = 0.0;
    for (int k : levels) {
      const FourierFactor factor =
          build_fourier_factor(make_model(k), 41, MomentAveraging::kAsymptotic);
      for (int r = 0; r < factor.ring_size; ++r) {
        worst_diag = std::max(worst_diag, std::abs(factor.g(r, r) - complexd(1.0)));
        for (int l = 0; l < factor.ring_size; ++l) {
          worst_mag = std::max(worst_mag, std::abs(factor.g(r, l)) - 1.0);
        }
      }
    }

    // Explicit small-N normalization check: Lambda = F (F^dag M F)^{-1/2} F^dag.
    double worst_lambda = 0.0;
    for (int k : {2, 3, kLevelInfinity}) {
      const AnyonModel model = make_model(k);
      const CoinCoefficients coins = coin_coefficients();
      for (int n : {16, 32}) {
        Eigen::MatrixXcd h2 = Eigen::MatrixXcd::Zero(n, n);
        for (int s = 0; s < n; ++s) h2(s, (s + 2) % n) = 1.0;
        const Eigen::MatrixXcd bands[3] = {h2, Eigen::MatrixXcd::Identity(n, n), h2.adjoint()};
        const KrausBand kb[3] = {KrausBand::kDown, KrausBand::kStay, KrausBand::kUp};
        const BandPair bp[3][3] = {
            {BandPair::kAA, BandPair::kAD, BandPair::kAB},
            {BandPair::kDA, BandPair::kDD, BandPair::kDB},
            {BandPair::kBA, BandPair::kBD, BandPair::kBB},
        };
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        for (int x = 0; x < 3; ++x) {
          for (int y = 0; y < 3; ++y) {
            const double coin = band_coin_product(coins, kb[x], kb[y]);
            if (coin == 0.0) continue;
            m += std::conj(coin * averaged_moment(bp[x][y], n, model)) *
                 (bands[x].adjoint() * bands[y]);
          }
        }
        Eigen::MatrixXcd f(n, n);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            f(a, b) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                                 2.0 * M_PI * static_cast<double>(a) * b / n);
        const Eigen::MatrixXcd diag = f.adjoint() * m * f;
        Eigen::VectorXcd inv_sqrt(n);
        for (int a = 0; a < n; ++a) inv_sqrt(a) = 1.0 / std::sqrt(diag(a, a).real());
        const Eigen::MatrixXcd lambda = f * inv_sqrt.asDiagonal() * f.adjoint();
        worst_lambda = std::max(worst_lambda, (lambda * lambda * m -
                                               Eigen::MatrixXcd::Identity(n, n))
                                                  .cwiseAbs()
                                                  .maxCoeff());
      }
    }

    Outcome o;
    o.pass = worst_trace <= 1e-12 && worst_herm <= 1e-12 && worst_eig >= -1e-8 &&
             worst_diag <= 1e-12 && worst_mag <= 1e-12 && worst_lambda <= 1e-10;
    o.detail = fmt("trace %.1e, herm %.1e, min eig %.1e, |G(r,r)-1| %.1e, |G|-1 %.1e, "
                   "|L^2M-I| %.1e",
                   worst_trace, worst_herm, worst_eig, worst_diag, worst_mag, worst_lambda);
    report(8, "cp-map sanity", o);
  }

  // 9. Disorder experiment -------------------------------------------------
  {
    const int seeds = 32;
    const int n = 4 * kIterations + 1, s0 = 2 * kIterations;
    std::vector<double> mean_scaled(kIterations + 1, 0.0);
    double mean_return = 0.0;
    for (int i = 0; i < seeds; ++i) {
      DisorderConfig config;
      config.phase = M_PI / 2.0;
      config.fill_probability = 0.5;
      config.seed = static_cast<std::uint64_t>(i);
      const WalkTrace trace = abelian_disorder_evolve(s0, kIterations, config, n);
      for (int it = 0; it <= kIterations; ++it) {
        mean_scaled[it] += trace.records[it].sigma2_scaled / seeds;
      }
      mean_return += trace.records.back().site_probability[s0] / seeds;
    }
    // Diffusive slope: straight-line fit over the last half, so the early
    // transient enters through the intercept instead of skewing the slope.
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0, count = 0.0;
    for (int it = 51; it <= kIterations; ++it) {
      st += it;
      sy += mean_scaled[it];
      stt += static_cast<double>(it) * it;
      sty += it * mean_scaled[it];
      count += 1.0;
    }
    const double slope = (count * sty - st * sy) / (count * stt - st * st);
    Outcome o;
    o.pass = slope >= 0.8 && slope <= 1.2 && mean_return < 0.1;
    o.detail = fmt("seed-averaged slope over [51,100] = %.4f (required [0.8, 1.2]); "
                   "p(s0, t=100) = %.4f (< 0.1)",
                   slope, mean_return);
    report(9, "disorder experiment", o);
  }

  // 10. Performance envelope ----------------------------------------------
  {
    const auto start = Clock::now();
    for (int k : levels) {
      const TableMomentProvider provider(make_model(k));
      evolve(2 * kIterations, kIterations, provider, coin_coefficients());
    }
    const double elapsed = seconds_since(start);
    Outcome o;
    o.pass = elapsed < 300.0;
    o.detail = fmt("sweep k in {1,2,3,5,inf}, t = 100 exact: %.1f s (limit 300 s)", elapsed);
    report(10, "performance envelope", o);
  }

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
