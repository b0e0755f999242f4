#pragma once

#include <complex>
#include <limits>

namespace aqw {

/// Sentinel level for the k -> infinity model (A = i, d = 2).
inline constexpr int kLevelInfinity = std::numeric_limits<int>::max();

/// SU(2)_k model parameters: the level k, the Kauffman variable
/// A = i e^{-i pi / (2(k+2))} and the quantum dimension d = 2 cos(pi/(k+2)).
struct AnyonModel {
  int level = 1;
  std::complex<double> kauffman_a{0.0, 1.0};
  double quantum_dimension = 1.0;

  bool infinite() const { return level == kLevelInfinity; }
};

/// Builds the model for a positive integer level, or kLevelInfinity.
/// Throws std::invalid_argument for level < 1.
AnyonModel make_model(int level);

}  // namespace aqw
