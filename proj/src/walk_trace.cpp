#include "aqw/walk_trace.hpp"

namespace aqw {

double raw_site_variance(const std::vector<double>& p) {
  double mean = 0.0, second = 0.0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    mean += p[s] * static_cast<double>(s);
    second += p[s] * static_cast<double>(s) * static_cast<double>(s);
  }
  return second - mean * mean;
}

}  // namespace aqw
