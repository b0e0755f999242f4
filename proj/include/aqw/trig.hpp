#pragma once

namespace aqw {

// cos(pi * num / den) and sin(pi * num / den).
// Exact (no rounding) whenever the reduced denominator is 1, 2 or 3, so the
// rational angles that must produce exact model constants (pi/3, 2pi/3, pi/2,
// pi, ...) do. Other angles fall back to the libm call.
double cos_pi_frac(long long num, long long den);
double sin_pi_frac(long long num, long long den);

}  // namespace aqw
