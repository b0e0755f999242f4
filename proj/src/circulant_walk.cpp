#include "aqw/circulant_walk.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "aqw/exact_walk.hpp"

namespace aqw {
namespace {

struct BandTerm {
  KrausBand forward;
  KrausBand backward;
  BandPair pair;
};

constexpr std::array<BandTerm, 9> kBandTerms = {{
    {KrausBand::kDown, KrausBand::kDown, BandPair::kAA},
    {KrausBand::kDown, KrausBand::kStay, BandPair::kAD},
    {KrausBand::kDown, KrausBand::kUp, BandPair::kAB},
    {KrausBand::kStay, KrausBand::kDown, BandPair::kDA},
    {KrausBand::kStay, KrausBand::kStay, BandPair::kDD},
    {KrausBand::kStay, KrausBand::kUp, BandPair::kDB},
    {KrausBand::kUp, KrausBand::kDown, BandPair::kBA},
    {KrausBand::kUp, KrausBand::kStay, BandPair::kBD},
    {KrausBand::kUp, KrausBand::kUp, BandPair::kBB},
}};

int band_phase(KrausBand band) {
  switch (band) {
    case KrausBand::kDown: return +2;
    case KrausBand::kStay: return 0;
    case KrausBand::kUp: return -2;
  }
  return 0;
}

}  // namespace

void apply_normalization_guard(Eigen::VectorXd& nu, double regularization) {
  if (regularization > 0.0) {
    nu.array() += regularization;
    return;
  }
  const double lowest = nu.minCoeff();
  if (lowest < kNormalizationFloor) {
    throw SingularNormalizationError(
        "normalization spectrum reaches " + std::to_string(lowest) +
        "; pass a Tikhonov epsilon to regularize");
  }
}

FourierFactor build_fourier_factor(const AnyonModel& model, int ring_size,
                                   MomentAveraging averaging, double regularization) {
  if (ring_size < 9) {
    throw std::invalid_argument("fourier factor needs ring_size >= 9");
  }
  const CoinCoefficients coins = coin_coefficients();

  struct Term {
    std::complex<double> mu;
    int phase_fwd;
    int phase_bwd;
  };
  std::vector<Term> terms;
  for (const BandTerm& bt : kBandTerms) {
    const double coin = band_coin_product(coins, bt.forward, bt.backward);
    if (coin == 0.0) continue;  // down/up cross pairs carry no coin weight
    const std::complex<double> avg = averaging == MomentAveraging::kFiniteN
                                         ? averaged_moment(bt.pair, ring_size, model)
                                         : disjoint_moment(bt.pair, model);
    terms.push_back({coin * avg, band_phase(bt.forward), band_phase(bt.backward)});
  }

  const int n = ring_size;
  std::vector<std::complex<double>> omega(n);
  for (int j = 0; j < n; ++j) omega[j] = std::polar(1.0, 2.0 * M_PI * j / n);
  const auto omega_pow = [&](long long e) { return omega[static_cast<int>(((e % n) + n) % n)]; };

  FourierFactor factor;
  factor.ring_size = n;
  factor.model = model;
  factor.averaging = averaging;
  factor.regularization = regularization;

  factor.nu = Eigen::VectorXd(n);
  for (int m = 0; m < n; ++m) {
    std::complex<double> v = 0.0;
    for (const Term& t : terms) v += t.mu * omega_pow(static_cast<long long>(t.phase_fwd - t.phase_bwd) * m);
    factor.nu(m) = v.real();
  }
  apply_normalization_guard(factor.nu, regularization);

  factor.g = Eigen::MatrixXcd::Zero(n, n);
  for (const Term& t : terms) {
    for (int r = 0; r < n; ++r) {
      const std::complex<double> fwd = t.mu * omega_pow(static_cast<long long>(t.phase_fwd) * r);
      for (int l = 0; l < n; ++l) {
        factor.g(r, l) += fwd * omega_pow(-static_cast<long long>(t.phase_bwd) * l);
      }
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int l = 0; l < n; ++l) {
      factor.g(r, l) /= std::sqrt(factor.nu(r) * factor.nu(l));
    }
  }
  return factor;
}

WalkTrace evolve_circulant(int s0, int iterations, const FourierFactor& factor) {
  const int n = factor.ring_size;
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  if (n < 4 * iterations + 1) {
    throw std::invalid_argument("ring size " + std::to_string(n) + " below 4t+1 = " +
                                std::to_string(4 * iterations + 1));
  }
  if (s0 < 0 || s0 >= n) throw std::invalid_argument("s0 outside the ring");

  std::vector<std::complex<double>> omega(n);
  for (int j = 0; j < n; ++j) omega[j] = std::polar(1.0, 2.0 * M_PI * j / n);
  const auto omega_pow = [&](long long e) { return omega[static_cast<int>(((e % n) + n) % n)]; };

  Eigen::MatrixXcd rho_hat(n, n);
  for (int r = 0; r < n; ++r) {
    for (int l = 0; l < n; ++l) {
      rho_hat(r, l) = omega_pow(-static_cast<long long>(s0) * (r - l)) / static_cast<double>(n);
    }
  }

  WalkTrace trace;
  trace.s0 = s0;
  trace.ring_size = n;

  const auto record = [&](int iteration) {
    // Collapse to the difference variable, then transform the diagonal back.
    std::vector<std::complex<double>> by_offset(n, 0.0);
    for (int r = 0; r < n; ++r) {
      for (int l = 0; l < n; ++l) {
        by_offset[((r - l) % n + n) % n] += rho_hat(r, l);
      }
    }
    WalkRecord rec;
    rec.iteration = iteration;
    rec.site_probability.resize(n);
    for (int s = 0; s < n; ++s) {
      std::complex<double> v = 0.0;
      for (int d = 0; d < n; ++d) v += omega_pow(static_cast<long long>(s) * d) * by_offset[d];
      rec.site_probability[s] = v.real() / n;
    }
    rec.sigma2_raw = raw_site_variance(rec.site_probability);
    rec.sigma2_scaled = kScaledVariancePerStep * rec.sigma2_raw;
    trace.records.push_back(std::move(rec));
  };

  record(0);
  for (int it = 1; it <= iterations; ++it) {
    rho_hat = rho_hat.cwiseProduct(factor.g);
    record(it);
  }
  return trace;
}

double ising_closed_form(int site, int iterations, int s0) {
  if (iterations < 0) return 0.0;
  const long long numer = 2LL * iterations - (site - s0);
  if (numer % 4 != 0) return 0.0;
  const long long m = numer / 4;
  if (m < 0 || m > iterations) return 0.0;
  double binom = 1.0;
  for (long long i = 1; i <= m; ++i) {
    binom *= static_cast<double>(iterations - m + i) / static_cast<double>(i);
  }
  return std::ldexp(binom, -iterations);
}

SiteDistribution ising_distribution(int iterations, int s0, int ring_size) {
  SiteDistribution dist;
  dist.s0 = s0;
  dist.p.resize(ring_size, 0.0);
  for (int s = 0; s < ring_size; ++s) dist.p[s] = ising_closed_form(s, iterations, s0);
  return dist;
}

}  // namespace aqw
