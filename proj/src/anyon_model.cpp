#include "aqw/anyon_model.hpp"

#include <stdexcept>
#include <string>

#include "aqw/trig.hpp"

namespace aqw {

AnyonModel make_model(int level) {
  AnyonModel m;
  if (level == kLevelInfinity) {
    m.level = kLevelInfinity;
    m.kauffman_a = {0.0, 1.0};
    m.quantum_dimension = 2.0;
    return m;
  }
  if (level < 1) {
    throw std::invalid_argument("anyon level must be a positive integer or infinity, got " +
                                std::to_string(level));
  }
  m.level = level;
  const long long den = level + 2;
  // A = i e^{-i theta/2} = sin(theta/2) + i cos(theta/2), theta = pi/(k+2)
  m.kauffman_a = {sin_pi_frac(1, 2 * den), cos_pi_frac(1, 2 * den)};
  m.quantum_dimension = 2.0 * cos_pi_frac(1, den);
  return m;
}

}  // namespace aqw
