#include "aqw/reference_walks.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "aqw/exact_walk.hpp"
#include "aqw/moments.hpp"

namespace aqw {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t h) { return static_cast<double>(h >> 11) * 0x1.0p-53; }

}  // namespace

SiteDistribution classical_rw(int iterations) {
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  const int t = iterations;
  SiteDistribution dist;
  dist.s0 = 2 * t;
  dist.p.assign(4 * t + 1, 0.0);
  double binom = 1.0;  // C(t, m) built by recurrence
  for (int m = 0; m <= t; ++m) {
    const int shat = t - 2 * m;
    dist.p[dist.s0 + 2 * shat] = std::ldexp(binom, -t);
    binom = binom * (t - m) / (m + 1);
  }
  return dist;
}

SiteDistribution coherent_hadamard_qw(int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be >= 0");
  const int n = 2 * steps + 1;
  const int origin = steps;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<std::complex<double>> left(n, 0.0), right(n, 0.0);  // coin 0 / coin 1
  left[origin] = 1.0;
  std::vector<std::complex<double>> next_left(n), next_right(n);
  for (int step = 0; step < steps; ++step) {
    // Hadamard on the coin, then conditional shift (coin 0 left, coin 1 right).
    for (int s = 0; s < n; ++s) {
      const std::complex<double> a = (left[s] + right[s]) * inv_sqrt2;
      const std::complex<double> b = (left[s] - right[s]) * inv_sqrt2;
      left[s] = a;
      right[s] = b;
    }
    std::fill(next_left.begin(), next_left.end(), std::complex<double>(0.0));
    std::fill(next_right.begin(), next_right.end(), std::complex<double>(0.0));
    for (int s = 0; s < n; ++s) {
      if (s - 1 >= 0) next_left[s - 1] += left[s];
      if (s + 1 < n) next_right[s + 1] += right[s];
    }
    left.swap(next_left);
    right.swap(next_right);
  }
  SiteDistribution dist;
  dist.s0 = origin;
  dist.p.resize(n);
  for (int s = 0; s < n; ++s) dist.p[s] = std::norm(left[s]) + std::norm(right[s]);
  return dist;
}

WalkTrace trivial_v2(int s0, int iterations, int ring_size) {
  const int n = ring_size > 0 ? ring_size : 4 * iterations + 1;
  AbelianPhaseMomentProvider provider(std::vector<double>(n, 0.0));
  return evolve(s0, iterations, provider, coin_coefficients(), n);
}

std::vector<int> island_fillings(const DisorderConfig& config, int ring_size) {
  std::vector<int> fill(ring_size);
  if (config.fixed_filling) {
    std::fill(fill.begin(), fill.end(), *config.fixed_filling);
    return fill;
  }
  if (config.fill_probability < 0.0 || config.fill_probability > 1.0) {
    throw std::invalid_argument("fill probability must lie in [0, 1]");
  }
  for (int s = 0; s < ring_size; ++s) {
    const std::uint64_t h = splitmix64(config.seed ^ splitmix64(static_cast<std::uint64_t>(s)));
    fill[s] = uniform01(h) < config.fill_probability ? 1 : 0;
  }
  return fill;
}

WalkTrace abelian_disorder_evolve(int s0, int iterations, const DisorderConfig& config,
                                  int ring_size) {
  const int n = ring_size > 0 ? ring_size : 4 * iterations + 1;
  const std::vector<int> fill = island_fillings(config, n);
  std::vector<double> phases(n);
  for (int s = 0; s < n; ++s) phases[s] = fill[s] * config.phase / 2.0;
  AbelianPhaseMomentProvider provider(std::move(phases));
  return evolve(s0, iterations, provider, coin_coefficients(), n);
}

}  // namespace aqw
