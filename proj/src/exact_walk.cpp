#include "aqw/exact_walk.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <string>

namespace aqw {

CoinCoefficients coin_coefficients() {
  using Mat2 = Eigen::Matrix2cd;
  Mat2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::sqrt(2.0);
  const Mat2 p[2] = {(Mat2() << 1, 0, 0, 0).finished(), (Mat2() << 0, 0, 0, 1).finished()};

  CoinCoefficients out;
  const Eigen::Vector2cd c0(1.0, 0.0);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Eigen::Vector2cd v = p[a] * h * p[b] * h * c0;
      out.c[0][a][b] = v(0);
      out.c[1][a][b] = v(1);
    }
  }
  return out;
}

namespace {

// (a, b) projector labels of the pieces making up each band. The stay band
// has two: the right-then-left path (0,1) and the left-then-right path (1,0).
const std::array<std::pair<int, int>, 2>& band_pieces(KrausBand band) {
  static const std::array<std::pair<int, int>, 2> down = {{{0, 0}, {-1, -1}}};
  static const std::array<std::pair<int, int>, 2> stay = {{{0, 1}, {1, 0}}};
  static const std::array<std::pair<int, int>, 2> up = {{{1, 1}, {-1, -1}}};
  switch (band) {
    case KrausBand::kDown: return down;
    case KrausBand::kStay: return stay;
    case KrausBand::kUp: return up;
  }
  return down;
}

}  // namespace

double band_coin_product(const CoinCoefficients& coins, KrausBand forward, KrausBand backward) {
  std::complex<double> total = 0.0;
  for (const auto& [a, b] : band_pieces(forward)) {
    if (a < 0) continue;
    for (const auto& [ap, bp] : band_pieces(backward)) {
      if (ap < 0) continue;
      total += coins.pair_product(a, b, ap, bp);
    }
  }
  return total.real();
}

SpatialDensityMatrix SpatialDensityMatrix::localized(int ring_size, int site) {
  SpatialDensityMatrix m;
  m.rho = Eigen::MatrixXcd::Zero(ring_size, ring_size);
  m.rho(site, site) = 1.0;
  return m;
}

double SpatialDensityMatrix::trace_deviation() const { return std::abs(rho.trace() - 1.0); }

double SpatialDensityMatrix::hermiticity_error() const {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double SpatialDensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::vector<double> SpatialDensityMatrix::diagonal_distribution() const {
  std::vector<double> p(size());
  for (int s = 0; s < size(); ++s) p[s] = rho(s, s).real();
  return p;
}

SpatialDensityMatrix apply_step(const SpatialDensityMatrix& input, const MomentProvider& moments,
                                const CoinCoefficients& coins) {
  const int n = input.size();
  const Eigen::MatrixXcd& rho = input.rho;

  // Derived coefficients of the seven terms, coin piece by coin piece.
  const std::complex<double> q_down_down = coins.pair_product(0, 0, 0, 0);
  const std::complex<double> q_down_stay = coins.pair_product(0, 0, 0, 1);
  const std::complex<double> q_stay_down = coins.pair_product(0, 1, 0, 0);
  const std::complex<double> q_stay_right = coins.pair_product(0, 1, 0, 1);
  const std::complex<double> q_stay_left = coins.pair_product(1, 0, 1, 0);
  const std::complex<double> q_stay_up = coins.pair_product(1, 0, 1, 1);
  const std::complex<double> q_up_stay = coins.pair_product(1, 1, 1, 0);
  const std::complex<double> q_up_up = coins.pair_product(1, 1, 1, 1);

  // Moments depend on the offset alone for table/oracle providers; cache the
  // eight bands over all offsets once per step.
  const bool cached = moments.offset_only();
  std::array<std::vector<std::complex<double>>, 8> band;
  if (cached) {
    for (int f = 0; f < 8; ++f) {
      band[f].resize(2 * n - 1);
      for (int offset = -(n - 1); offset <= n - 1; ++offset) {
        band[f][offset + n - 1] = moments.moment_at_offset(kAllMomentFamilies[f], offset);
      }
    }
  }
  const auto moment_at = [&](MomentFamily f, int s, int sp) {
    return cached ? band[static_cast<int>(f)][sp - s + n - 1] : moments.moment(f, s, sp);
  };

  SpatialDensityMatrix out;
  out.rho = Eigen::MatrixXcd::Zero(n, n);
  const auto wrap = [n](int s) { return s < 0 ? s + n : (s >= n ? s - n : s); };

  for (int sp = 0; sp < n; ++sp) {
    const int sp_minus = wrap(sp - 2), sp_plus = wrap(sp + 2);
    for (int s = 0; s < n; ++s) {
      const std::complex<double> w = rho(s, sp);
      if (w == 0.0) continue;
      const int s_minus = wrap(s - 2), s_plus = wrap(s + 2);

      out.rho(s_minus, sp_minus) += q_down_down * moment_at(MomentFamily::kDownDown, s, sp) * w;
      out.rho(s_minus, sp) += q_down_stay * moment_at(MomentFamily::kDownStay, s, sp) * w;
      out.rho(s, sp_minus) += q_stay_down * moment_at(MomentFamily::kStayDown, s, sp) * w;
      out.rho(s, sp) += (q_stay_right * moment_at(MomentFamily::kStayStayRight, s, sp) +
                         q_stay_left * moment_at(MomentFamily::kStayStayLeft, s, sp)) *
                        w;
      out.rho(s, sp_plus) += q_stay_up * moment_at(MomentFamily::kStayUp, s, sp) * w;
      out.rho(s_plus, sp) += q_up_stay * moment_at(MomentFamily::kUpStay, s, sp) * w;
      out.rho(s_plus, sp_plus) += q_up_up * moment_at(MomentFamily::kUpUp, s, sp) * w;
    }
  }

  const double drift = std::abs(out.rho.trace() - rho.trace());
  if (drift > 1e-9) {
    throw TraceDriftError("superoperator step lost trace by " + std::to_string(drift));
  }
  return out;
}

WalkTrace evolve(int s0, int iterations, const MomentProvider& moments,
                 const CoinCoefficients& coins, int ring_size) {
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  const int n = ring_size > 0 ? ring_size : 4 * iterations + 1;
  if (n < 4 * iterations + 1) {
    throw std::invalid_argument("ring size " + std::to_string(n) + " below 4t+1 = " +
                                std::to_string(4 * iterations + 1));
  }
  if (s0 - 2 * iterations < 0 || s0 + 2 * iterations >= n) {
    throw std::invalid_argument("walk support [s0-2t, s0+2t] would cross the ring boundary");
  }

  WalkTrace trace;
  trace.s0 = s0;
  trace.ring_size = n;

  SpatialDensityMatrix rho = SpatialDensityMatrix::localized(n, s0);
  const auto record = [&](int iteration) {
    WalkRecord r;
    r.iteration = iteration;
    r.site_probability = rho.diagonal_distribution();
    r.sigma2_raw = raw_site_variance(r.site_probability);
    r.sigma2_scaled = kScaledVariancePerStep * r.sigma2_raw;
    trace.records.push_back(std::move(r));
  };

  record(0);
  for (int it = 1; it <= iterations; ++it) {
    rho = apply_step(rho, moments, coins);
    record(it);
  }
  return trace;
}

}  // namespace aqw
