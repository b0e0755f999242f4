#pragma once

#include <vector>

#include "aqw/walk_trace.hpp"

namespace aqw {

/// Position variance in double-site units shat = (s - s0)/2.
/// Rejects distributions whose mass differs from 1 by more than 1e-8.
double scaled_variance(const SiteDistribution& dist);

struct VarianceFit {
  double k2 = 0.0;
  double k3 = 0.0;
  double offset = 0.0;  // only populated when fitted with an offset term
  bool with_offset = false;
  double window_begin = 0.0;
  double window_end = 0.0;
  double rms_residual = 0.0;
};

/// Least-squares fit of sigma2 = K2 t^2 + K3 t over the points whose t lies
/// in [window_begin, window_end]; the constant term is excluded unless
/// with_offset. Needs at least three points in the window.
VarianceFit fit_quadratic(const std::vector<double>& t, const std::vector<double>& sigma2,
                          double window_begin, double window_end, bool with_offset = false);

/// Total variation distance (1/2) sum |p - q|; both inputs must be normalized
/// and of equal length.
double total_variation(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace aqw
