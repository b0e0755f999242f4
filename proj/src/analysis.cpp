#include "aqw/analysis.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace aqw {

double scaled_variance(const SiteDistribution& dist) {
  double mass = 0.0, mean = 0.0, second = 0.0;
  for (std::size_t s = 0; s < dist.p.size(); ++s) {
    const double shat = (static_cast<double>(s) - dist.s0) / 2.0;
    mass += dist.p[s];
    mean += dist.p[s] * shat;
    second += dist.p[s] * shat * shat;
  }
  if (std::abs(mass - 1.0) > 1e-8) {
    throw std::invalid_argument("distribution mass " + std::to_string(mass) + " is not 1");
  }
  return second - mean * mean;
}

VarianceFit fit_quadratic(const std::vector<double>& t, const std::vector<double>& sigma2,
                          double window_begin, double window_end, bool with_offset) {
  if (t.size() != sigma2.size()) {
    throw std::invalid_argument("t and sigma2 series differ in length");
  }
  std::vector<int> picked;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= window_begin && t[i] <= window_end) picked.push_back(static_cast<int>(i));
  }
  const int params = with_offset ? 3 : 2;
  if (static_cast<int>(picked.size()) < 3) {
    throw std::invalid_argument("fit window holds fewer than 3 points");
  }

  Eigen::MatrixXd a(picked.size(), params);
  Eigen::VectorXd y(picked.size());
  for (std::size_t r = 0; r < picked.size(); ++r) {
    const double tv = t[picked[r]];
    a(r, 0) = tv * tv;
    a(r, 1) = tv;
    if (with_offset) a(r, 2) = 1.0;
    y(r) = sigma2[picked[r]];
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);

  VarianceFit fit;
  fit.k2 = coef(0);
  fit.k3 = coef(1);
  fit.offset = with_offset ? coef(2) : 0.0;
  fit.with_offset = with_offset;
  fit.window_begin = window_begin;
  fit.window_end = window_end;
  fit.rms_residual = std::sqrt((a * coef - y).squaredNorm() / picked.size());
  return fit;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("total variation needs equal-length distributions");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

}  // namespace aqw
