#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aqw/walk_trace.hpp"

namespace aqw {

/// Classical random walk doing one double-site step (+-1 in shat units) per
/// iteration: the binomial distribution with scaled variance t.
SiteDistribution classical_rw(int iterations);

/// Fully coherent coined walk on the line: Hadamard coin started in |0>,
/// coin 0 shifts left, coin 1 shifts right. `steps` counts single walk steps.
SiteDistribution coherent_hadamard_qw(int steps);

/// The V^2 walk with every braid moment identically one (trivial exchange
/// statistics); bit for bit the k = 1 pathway of the exact engine.
WalkTrace trivial_v2(int s0, int iterations, int ring_size = 0);

/// Abelian disorder: island s holds n_s anyons of exchange phase `phase`,
/// giving braid scalar e^{i n_s phase / 2}. Occupations are either a fixed
/// integer per island or Bernoulli(fill_probability) draws from `seed`.
struct DisorderConfig {
  double phase = 0.0;
  double fill_probability = 0.5;
  std::optional<int> fixed_filling;
  std::uint64_t seed = 0;
};

/// Island occupation numbers for a ring, deterministic in config.seed.
std::vector<int> island_fillings(const DisorderConfig& config, int ring_size);

WalkTrace abelian_disorder_evolve(int s0, int iterations, const DisorderConfig& config,
                                  int ring_size = 0);

}  // namespace aqw
