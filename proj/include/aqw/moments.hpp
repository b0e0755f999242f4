#pragma once

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "aqw/anyon_model.hpp"
#include "aqw/braid.hpp"

namespace aqw {

/// The eight braid expectation values appearing in the double-step map,
/// labelled by the (ket shift, bra shift) band pair they multiply.
/// "Down" shifts a site index by -2, "Up" by +2, "Stay" leaves it.
enum class MomentFamily {
  kDownDown,       // <b+_{s'-1} b+_{s'-2} b_{s-2} b_{s-1}>   on |s-2><s'-2|
  kDownStay,       // <b+2_{s'}  b_{s-2} b_{s-1}>             on |s-2><s'|
  kStayDown,       // <b+_{s'-1} b+_{s'-2} b^2_s>             on |s><s'-2|
  kStayStayRight,  // <b+2_{s'}  b^2_s>                       on |s><s'|
  kStayStayLeft,   // <b+2_{s'-1} b^2_{s-1}>                  on |s><s'|
  kStayUp,         // <b+_{s'} b+_{s'+1} b^2_{s-1}>           on |s><s'+2|
  kUpStay,         // <b+2_{s'-1} b_{s+1} b_s>                on |s+2><s'|
  kUpUp,           // <b+_{s'} b+_{s'+1} b_{s+1} b_s>         on |s+2><s'+2|
};

inline constexpr std::array<MomentFamily, 8> kAllMomentFamilies = {
    MomentFamily::kDownDown, MomentFamily::kDownStay,       MomentFamily::kStayDown,
    MomentFamily::kStayStayRight, MomentFamily::kStayStayLeft, MomentFamily::kStayUp,
    MomentFamily::kUpStay,   MomentFamily::kUpUp,
};

const char* to_string(MomentFamily family);

/// Letters of the family's braid word anchored at sites (s, s'), in
/// application order. Indices may be non-positive for small s; callers that
/// feed an absolute-index consumer must shift or wrap them first.
std::vector<BraidLetter> family_letters(MomentFamily family, int site, int site_prime);

/// The family word at offset site' - site = `offset`, translated onto a strand
/// range safe for the bracket oracle (all indices >= 1).
BraidWord family_word_at_offset(MomentFamily family, int offset);

/// Closed-form Table value of the family moment at offset s' - s. Every
/// offset is valid; offsets beyond the short near-diagonal window give the
/// disjoint-link value.
std::complex<double> table_moment(MomentFamily family, int offset, const AnyonModel& model);

/// Source of the braid moments consumed by the evolution engines.
class MomentProvider {
 public:
  virtual ~MomentProvider() = default;

  /// Moment of `family` anchored at sites (site, site_prime).
  virtual std::complex<double> moment(MomentFamily family, int site, int site_prime) const = 0;

  /// True when the moment depends on site_prime - site only.
  virtual bool offset_only() const = 0;

  std::complex<double> moment_at_offset(MomentFamily family, int offset) const {
    return moment(family, 0, offset);
  }
};

/// Closed-form Table moments.
class TableMomentProvider : public MomentProvider {
 public:
  explicit TableMomentProvider(const AnyonModel& model) : model_(model) {}
  std::complex<double> moment(MomentFamily family, int site, int site_prime) const override {
    return table_moment(family, site_prime - site, model_);
  }
  bool offset_only() const override { return true; }
  const AnyonModel& model() const { return model_; }

 private:
  AnyonModel model_;
};

/// Ground-truth moments evaluated through the Kauffman-bracket state sum.
/// Results are memoized per offset; reads are thread safe.
class OracleMomentProvider : public MomentProvider {
 public:
  explicit OracleMomentProvider(const AnyonModel& model) : model_(model) {}
  std::complex<double> moment(MomentFamily family, int site, int site_prime) const override;
  bool offset_only() const override { return true; }

 private:
  AnyonModel model_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::complex<double>> cache_;
};

/// Abelian statistics: island s carries phase theta_s and generator b_s is
/// the scalar e^{i theta_s}, so every moment is a product of four unit
/// phases. Site dependent unless the phases are uniform. Each family moment
/// factorizes into conj(backward band factor at s') * (forward band factor
/// at s); the per-site band factors are precomputed, so lookups are O(1).
class AbelianPhaseMomentProvider : public MomentProvider {
 public:
  explicit AbelianPhaseMomentProvider(std::vector<double> island_phases);
  std::complex<double> moment(MomentFamily family, int site, int site_prime) const override;
  bool offset_only() const override { return false; }
  int ring_size() const { return static_cast<int>(down_.size()); }

 private:
  // Fusion-word scalars per anchor site: down = u_{s-2} u_{s-1},
  // stay via the right path = u_s^2, via the left path = u_{s-1}^2,
  // up = u_s u_{s+1}, where u_s = e^{i theta_s}.
  std::vector<std::complex<double>> down_, stay_right_, stay_left_, up_;
};

/// Kraus band pair labels for the averaged (circulant) quantities.
/// a: down-shift band, d: stay band, b: up-shift band.
enum class BandPair { kAA, kAD, kAB, kDA, kDD, kDB, kBA, kBD, kBB };

inline constexpr std::array<BandPair, 9> kAllBandPairs = {
    BandPair::kAA, BandPair::kAD, BandPair::kAB, BandPair::kDA, BandPair::kDD,
    BandPair::kDB, BandPair::kBA, BandPair::kBD, BandPair::kBB};

const char* to_string(BandPair pair);

/// Family backing a band pair, when the closed-form table covers it. kAB/kBA
/// have no table family (their coin weight vanishes) and are evaluated
/// through the bracket oracle.
std::optional<MomentFamily> band_pair_family(BandPair pair);

/// Arithmetic average (1/N^2) sum over the N^2 ring offset pairs of the band
/// pair's moment, computed in O(1) from the disjoint value plus the
/// near-diagonal specials. Requires ring_size >= 9 so the special offsets
/// cannot wrap onto each other.
std::complex<double> averaged_moment(BandPair pair, int ring_size, const AnyonModel& model);

/// Large-N limit of averaged_moment: the disjoint-link value.
std::complex<double> disjoint_moment(BandPair pair, const AnyonModel& model);

/// Normalization coefficients of the averaged map.
struct KappaPair {
  double kappa1 = 0.0;
  std::complex<double> kappa2{0.0, 0.0};
};

/// Finite-N kappas assembled from the arithmetic averages:
/// kappa1 = (avg aa + 2 avg dd + avg bb)/4, kappa2 = (avg ad + avg db)/4.
KappaPair kappas_finite(const AnyonModel& model, int ring_size);

/// Large-N closed forms,
/// kappa1 = (6 cos 2u + 4 cos 4u + 2 cos 6u + 5) sec^4(u) / 32 and
/// kappa2 = (cos 4u - cos 2u + 1) sec^2(u) / 8 with u = pi/(k+2).
KappaPair kappas_asymptotic(const AnyonModel& model);

}  // namespace aqw
