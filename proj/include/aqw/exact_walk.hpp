#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

#include "aqw/moments.hpp"
#include "aqw/walk_trace.hpp"

namespace aqw {

/// Coin matrix elements C_c^{ab} = <c| P_a H P_b H |c0> with c0 = |0> and the
/// Hadamard coin, computed by direct 2x2 products. The superoperator's seven
/// band coefficients are the pairwise c-summed products of these; no sign is
/// hardcoded anywhere downstream.
struct CoinCoefficients {
  std::complex<double> c[2][2][2];  // [coin c][a][b]

  /// sum_c C_c^{ab} conj(C_c^{a'b'})
  std::complex<double> pair_product(int a, int b, int a_prime, int b_prime) const {
    return c[0][a][b] * std::conj(c[0][a_prime][b_prime]) +
           c[1][a][b] * std::conj(c[1][a_prime][b_prime]);
  }
};

CoinCoefficients coin_coefficients();

/// Spatial Kraus bands of the double step: down shifts s by -2, up by +2.
enum class KrausBand { kDown, kStay, kUp };

/// Coin weight of a (forward, backward) band pair: the c- and piece-summed
/// pair products. The two stay pieces live on orthogonal coin components, so
/// summing over all piece pairs needs no case analysis.
double band_coin_product(const CoinCoefficients& coins, KrausBand forward, KrausBand backward);

/// N x N spatial density matrix over ring sites.
struct SpatialDensityMatrix {
  Eigen::MatrixXcd rho;

  int size() const { return static_cast<int>(rho.rows()); }
  static SpatialDensityMatrix localized(int ring_size, int site);

  double trace_deviation() const;    // |tr - 1|
  double hermiticity_error() const;  // max |rho - rho^dag|
  double min_eigenvalue() const;     // smallest eigenvalue (O(N^3), small N only)
  std::vector<double> diagonal_distribution() const;
};

/// Raised when a step loses more trace than the physical map allows;
/// indicates mis-wired coefficients or an unphysical moment provider.
class TraceDriftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One application of the seven-band superoperator. Each element |s><s'| is
/// scattered to the seven targets (s -2|0|+2, s' -2|0|+2 with no down/up
/// cross terms), weighted by coin pair product times the family moment at
/// (s, s'). Throws TraceDriftError if the output trace drifts from the input
/// trace by more than 1e-9.
SpatialDensityMatrix apply_step(const SpatialDensityMatrix& rho, const MomentProvider& moments,
                                const CoinCoefficients& coins);

/// Iterates apply_step from |s0><s0|, recording the site distribution and
/// variances at every iteration (the t = 0 record is included). ring_size 0
/// auto-selects 4t+1; anything smaller than 4t+1 is rejected, as is an s0
/// whose support could reach the boundary.
WalkTrace evolve(int s0, int iterations, const MomentProvider& moments,
                 const CoinCoefficients& coins, int ring_size = 0);

}  // namespace aqw
