#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "aqw/anyon_model.hpp"
#include "aqw/moments.hpp"
#include "aqw/walk_trace.hpp"

namespace aqw {

/// How the band averages entering the circulant map are taken.
enum class MomentAveraging {
  kFiniteN,     // arithmetic ring averages at the factor's ring size
  kAsymptotic,  // disjoint-link values (the large-N limit)
};

/// Raised when the averaged map's normalization spectrum has a (near-)zero
/// eigenvalue and no regularization was requested.
class SingularNormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kNormalizationFloor = 1e-9;

/// One-iteration multiplier of the Fourier-transformed density matrix:
/// rho_hat(r, l) -> G(r, l) rho_hat(r, l). nu holds the Fourier eigenvalues
/// of the normalization M = sum E^dag E of the averaged Kraus generators, so
/// G(r, r) = 1 and |G(r, l)| <= 1 (Cauchy-Schwarz) hold by construction.
struct FourierFactor {
  int ring_size = 0;
  AnyonModel model;
  MomentAveraging averaging = MomentAveraging::kAsymptotic;
  double regularization = 0.0;
  Eigen::MatrixXcd g;
  Eigen::VectorXd nu;
};

/// Checks min nu against kNormalizationFloor; adds epsilon when regularization
/// is requested, throws SingularNormalizationError otherwise.
void apply_normalization_guard(Eigen::VectorXd& nu, double regularization);

/// Assembles G from the nine band-pair terms: coin pair-product times the
/// banded moment average, with band phases +2 (down / h^2), 0 (stay) and
/// -2 (up / h^-2) in Fourier space. Requires ring_size >= 9.
FourierFactor build_fourier_factor(const AnyonModel& model, int ring_size,
                                   MomentAveraging averaging, double regularization = 0.0);

/// Propagates rho_hat(r, l, 0) = w^{-s0 (r-l)} / N by elementwise powers of G
/// and inverse-transforms the diagonal each iteration (O(N^2) per iteration
/// via the difference variable). Same trace conventions as the exact engine.
WalkTrace evolve_circulant(int s0, int iterations, const FourierFactor& factor);

/// Closed-form Ising (k = 2) distribution,
/// p(s, t) = 2^-t binom(t, (2t - (s - s0))/4) on s - s0 in 4Z, |s - s0| <= 2t.
double ising_closed_form(int site, int iterations, int s0);

/// The closed form tabulated over a ring.
SiteDistribution ising_distribution(int iterations, int s0, int ring_size);

}  // namespace aqw
