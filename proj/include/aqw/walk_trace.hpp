#pragma once

#include <vector>

namespace aqw {

/// A site distribution anchored at the walk origin s0. p[s] indexes absolute
/// sites 0..size-1.
struct SiteDistribution {
  int s0 = 0;
  std::vector<double> p;
};

/// sigma2_scaled = sigma2_raw / 2: site variance per quantum-walk step, two
/// steps per superoperator iteration. This is the unit system in which the
/// Ising walk satisfies sigma2 = t and the classical unit-step walk is the
/// line sigma2 = t.
inline constexpr double kScaledVariancePerStep = 0.5;

struct WalkRecord {
  int iteration = 0;
  std::vector<double> site_probability;
  double sigma2_raw = 0.0;
  double sigma2_scaled = 0.0;
};

struct WalkTrace {
  int s0 = 0;
  int ring_size = 0;
  std::vector<WalkRecord> records;

  SiteDistribution distribution(std::size_t record_index) const {
    return SiteDistribution{s0, records.at(record_index).site_probability};
  }
};

/// Variance of the absolute site index under p.
double raw_site_variance(const std::vector<double>& p);

}  // namespace aqw
