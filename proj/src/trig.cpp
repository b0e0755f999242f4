#include "aqw/trig.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

namespace aqw {
namespace {

// Reduces to m/den with m in [0, 2*den) after dividing out the gcd.
struct ReducedAngle {
  long long m;
  long long den;
};

ReducedAngle reduce(long long num, long long den) {
  const long long g = std::gcd(std::llabs(num), den);
  num /= g;
  den /= g;
  long long m = num % (2 * den);
  if (m < 0) m += 2 * den;
  return {m, den};
}

}  // namespace

double cos_pi_frac(long long num, long long den) {
  const auto [m, q] = reduce(num, den);
  switch (q) {
    case 1:
      return m == 0 ? 1.0 : -1.0;
    case 2:
      return (m % 2 == 1) ? 0.0 : (m == 0 ? 1.0 : -1.0);
    case 3: {
      static const double table[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
      return table[m];
    }
    default:
      return std::cos(M_PI * static_cast<double>(num) / static_cast<double>(den));
  }
}

double sin_pi_frac(long long num, long long den) {
  const auto [m, q] = reduce(num, den);
  switch (q) {
    case 1:
      return 0.0;
    case 2: {
      static const double table[4] = {0.0, 1.0, 0.0, -1.0};
      return table[m];
    }
    default:
      return std::sin(M_PI * static_cast<double>(num) / static_cast<double>(den));
  }
}

}  // namespace aqw
