#include "aqw/moments.hpp"

#include <algorithm>
#include <stdexcept>

#include "aqw/bracket.hpp"
#include "aqw/trig.hpp"

namespace aqw {
namespace {

struct TableIngredients {
  double d;         // quantum dimension
  double inv_d2;
  double inv_d4;
  double x;         // A^4 + A^-4 = 2 cos(2 pi/(k+2))
  std::complex<double> w2;  // -A^6  (A^4+A^-4) / d^3 = e^{-3i theta} x / d^3
  std::complex<double> w6;  // -A^-6 (A^4+A^-4) / d^3
  std::complex<double> f4;  // (A^4+A^-4)^2 / d^2
};

TableIngredients ingredients(const AnyonModel& model) {
  TableIngredients t;
  if (model.infinite()) {
    t.d = 2.0;
    t.x = 2.0;
    t.w2 = t.w6 = 2.0 / 8.0;
    t.f4 = 1.0;
    t.inv_d2 = 0.25;
    t.inv_d4 = 0.0625;
    return t;
  }
  const long long den = model.level + 2;
  t.d = 2.0 * cos_pi_frac(1, den);
  t.x = 2.0 * cos_pi_frac(2, den);
  t.inv_d2 = 1.0 / (t.d * t.d);
  t.inv_d4 = t.inv_d2 * t.inv_d2;
  const std::complex<double> e3{cos_pi_frac(3, den), -sin_pi_frac(3, den)};  // e^{-3 i theta}
  t.w2 = e3 * (t.x / (t.d * t.d * t.d));
  t.w6 = std::conj(e3) * (t.x / (t.d * t.d * t.d));
  t.f4 = t.x * t.x * t.inv_d2;
  return t;
}

BraidWord shift_to_positive(std::vector<BraidLetter> letters) {
  int lo = 1, hi = 1;
  for (const BraidLetter& l : letters) {
    lo = std::min(lo, l.index);
    hi = std::max(hi, l.index);
  }
  const int shift = 1 - lo;
  BraidWord word;
  word.strand_count = hi + shift + 1;
  for (BraidLetter& l : letters) l.index += shift;
  word.letters = std::move(letters);
  return word;
}

// Forward Kraus-band words at anchor j: down-band carries b_j b_{j+1}
// (b_{j+1} first), stay carries b_j^2, up carries b_{j+1} b_j (b_j first).
std::vector<BraidLetter> ab_pair_letters(BandPair pair, int j, int jp) {
  std::vector<BraidLetter> out;
  if (pair == BandPair::kAB) {
    out = {{j + 1, +1}, {j, +1}, {jp + 1, -1}, {jp, -1}};
  } else {  // kBA
    out = {{j, +1}, {j + 1, +1}, {jp, -1}, {jp + 1, -1}};
  }
  return out;
}

std::complex<double> oracle_pair_moment(BandPair pair, int offset, const AnyonModel& model) {
  const int base = 8;
  return markov_expectation(shift_to_positive(ab_pair_letters(pair, base, base + offset)), model);
}

}  // namespace

const char* to_string(MomentFamily family) {
  switch (family) {
    case MomentFamily::kDownDown: return "down_down";
    case MomentFamily::kDownStay: return "down_stay";
    case MomentFamily::kStayDown: return "stay_down";
    case MomentFamily::kStayStayRight: return "stay_stay_right";
    case MomentFamily::kStayStayLeft: return "stay_stay_left";
    case MomentFamily::kStayUp: return "stay_up";
    case MomentFamily::kUpStay: return "up_stay";
    case MomentFamily::kUpUp: return "up_up";
  }
  return "?";
}

const char* to_string(BandPair pair) {
  switch (pair) {
    case BandPair::kAA: return "aa";
    case BandPair::kAD: return "ad";
    case BandPair::kAB: return "ab";
    case BandPair::kDA: return "da";
    case BandPair::kDD: return "dd";
    case BandPair::kDB: return "db";
    case BandPair::kBA: return "ba";
    case BandPair::kBD: return "bd";
    case BandPair::kBB: return "bb";
  }
  return "?";
}

std::vector<BraidLetter> family_letters(MomentFamily family, int s, int sp) {
  switch (family) {
    case MomentFamily::kDownDown:
      return {{s - 1, +1}, {s - 2, +1}, {sp - 2, -1}, {sp - 1, -1}};
    case MomentFamily::kDownStay:
      return {{s - 1, +1}, {s - 2, +1}, {sp, -1}, {sp, -1}};
    case MomentFamily::kStayDown:
      return {{s, +1}, {s, +1}, {sp - 2, -1}, {sp - 1, -1}};
    case MomentFamily::kStayStayRight:
      return {{s, +1}, {s, +1}, {sp, -1}, {sp, -1}};
    case MomentFamily::kStayStayLeft:
      return {{s - 1, +1}, {s - 1, +1}, {sp - 1, -1}, {sp - 1, -1}};
    case MomentFamily::kStayUp:
      return {{s - 1, +1}, {s - 1, +1}, {sp + 1, -1}, {sp, -1}};
    case MomentFamily::kUpStay:
      return {{s, +1}, {s + 1, +1}, {sp - 1, -1}, {sp - 1, -1}};
    case MomentFamily::kUpUp:
      return {{s, +1}, {s + 1, +1}, {sp + 1, -1}, {sp, -1}};
  }
  throw std::invalid_argument("unknown moment family");
}

BraidWord family_word_at_offset(MomentFamily family, int offset) {
  return shift_to_positive(family_letters(family, 0, offset));
}

std::complex<double> table_moment(MomentFamily family, int offset, const AnyonModel& model) {
  const TableIngredients t = ingredients(model);
  switch (family) {
    case MomentFamily::kDownDown:
    case MomentFamily::kUpUp:
      if (offset == 0) return 1.0;
      if (offset == 1 || offset == -1) return t.inv_d2;
      return t.inv_d4;
    case MomentFamily::kDownStay:
      return (offset == -2 || offset == -1) ? std::complex<double>(t.inv_d2) : t.w2;
    case MomentFamily::kStayUp:
      return (offset == -2 || offset == -1) ? std::complex<double>(t.inv_d2) : t.w6;
    case MomentFamily::kStayStayRight:
    case MomentFamily::kStayStayLeft:
      return offset == 0 ? std::complex<double>(1.0) : t.f4;
    case MomentFamily::kStayDown:
      return std::conj(table_moment(MomentFamily::kDownStay, -offset, model));
    case MomentFamily::kUpStay:
      return std::conj(table_moment(MomentFamily::kStayUp, -offset, model));
  }
  throw std::invalid_argument("unknown moment family");
}

std::complex<double> OracleMomentProvider::moment(MomentFamily family, int site,
                                                  int site_prime) const {
  const int offset = site_prime - site;
  const std::pair<int, int> key{static_cast<int>(family), offset};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  const std::complex<double> value =
      markov_expectation(family_word_at_offset(family, offset), model_);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

AbelianPhaseMomentProvider::AbelianPhaseMomentProvider(std::vector<double> island_phases) {
  if (island_phases.empty()) {
    throw std::invalid_argument("abelian phase provider needs at least one island");
  }
  const int n = static_cast<int>(island_phases.size());
  std::vector<std::complex<double>> unit(n);
  for (int s = 0; s < n; ++s) unit[s] = std::polar(1.0, island_phases[s]);
  const auto at = [&](int idx) { return unit[((idx % n) + n) % n]; };

  down_.resize(n);
  stay_right_.resize(n);
  stay_left_.resize(n);
  up_.resize(n);
  for (int s = 0; s < n; ++s) {
    down_[s] = at(s - 2) * at(s - 1);
    stay_right_[s] = at(s) * at(s);
    stay_left_[s] = at(s - 1) * at(s - 1);
    up_[s] = at(s) * at(s + 1);
  }
}

std::complex<double> AbelianPhaseMomentProvider::moment(MomentFamily family, int site,
                                                        int site_prime) const {
  const int n = ring_size();
  const int s = ((site % n) + n) % n;
  const int sp = ((site_prime % n) + n) % n;
  switch (family) {
    case MomentFamily::kDownDown:
      return std::conj(down_[sp]) * down_[s];
    case MomentFamily::kDownStay:
      return std::conj(stay_right_[sp]) * down_[s];
    case MomentFamily::kStayDown:
      return std::conj(down_[sp]) * stay_right_[s];
    case MomentFamily::kStayStayRight:
      return std::conj(stay_right_[sp]) * stay_right_[s];
    case MomentFamily::kStayStayLeft:
      return std::conj(stay_left_[sp]) * stay_left_[s];
    case MomentFamily::kStayUp:
      return std::conj(up_[sp]) * stay_left_[s];
    case MomentFamily::kUpStay:
      return std::conj(stay_left_[sp]) * up_[s];
    case MomentFamily::kUpUp:
      return std::conj(up_[sp]) * up_[s];
  }
  throw std::invalid_argument("unknown moment family");
}

std::optional<MomentFamily> band_pair_family(BandPair pair) {
  switch (pair) {
    case BandPair::kAA: return MomentFamily::kDownDown;
    case BandPair::kAD: return MomentFamily::kDownStay;
    case BandPair::kDA: return MomentFamily::kStayDown;
    case BandPair::kDD: return MomentFamily::kStayStayRight;
    case BandPair::kDB: return MomentFamily::kStayUp;
    case BandPair::kBD: return MomentFamily::kUpStay;
    case BandPair::kBB: return MomentFamily::kUpUp;
    case BandPair::kAB:
    case BandPair::kBA: return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// Near-diagonal offsets whose table value can differ from the disjoint one.
std::vector<int> special_offsets(MomentFamily family) {
  switch (family) {
    case MomentFamily::kDownDown:
    case MomentFamily::kUpUp:
      return {-1, 0, 1};
    case MomentFamily::kStayStayRight:
    case MomentFamily::kStayStayLeft:
      return {0};
    case MomentFamily::kDownStay:
    case MomentFamily::kStayUp:
      return {-2, -1};
    case MomentFamily::kStayDown:
    case MomentFamily::kUpStay:
      return {1, 2};
  }
  return {};
}

constexpr int kDisjointOffset = 100;  // far beyond every special window

}  // namespace

std::complex<double> disjoint_moment(BandPair pair, const AnyonModel& model) {
  if (auto family = band_pair_family(pair)) {
    return table_moment(*family, kDisjointOffset, model);
  }
  return oracle_pair_moment(pair, kDisjointOffset, model);
}

std::complex<double> averaged_moment(BandPair pair, int ring_size, const AnyonModel& model) {
  if (ring_size < 9) {
    throw std::invalid_argument("averaged moments need ring_size >= 9, got " +
                                std::to_string(ring_size));
  }
  const std::complex<double> disjoint = disjoint_moment(pair, model);
  std::complex<double> correction = 0.0;
  if (auto family = band_pair_family(pair)) {
    for (int offset : special_offsets(*family)) {
      correction += table_moment(*family, offset, model) - disjoint;
    }
  } else {
    for (int offset = -4; offset <= 4; ++offset) {
      correction += oracle_pair_moment(pair, offset, model) - disjoint;
    }
  }
  return disjoint + correction / static_cast<double>(ring_size);
}

KappaPair kappas_finite(const AnyonModel& model, int ring_size) {
  KappaPair k;
  k.kappa1 = 0.25 * (averaged_moment(BandPair::kAA, ring_size, model) +
                     2.0 * averaged_moment(BandPair::kDD, ring_size, model) +
                     averaged_moment(BandPair::kBB, ring_size, model))
                 .real();
  k.kappa2 = 0.25 * (averaged_moment(BandPair::kAD, ring_size, model) +
                     averaged_moment(BandPair::kDB, ring_size, model));
  return k;
}

KappaPair kappas_asymptotic(const AnyonModel& model) {
  double c2 = 1.0, c4 = 1.0, c6 = 1.0, sec = 1.0;
  if (!model.infinite()) {
    const long long den = model.level + 2;
    c2 = cos_pi_frac(2, den);
    c4 = cos_pi_frac(4, den);
    c6 = cos_pi_frac(6, den);
    sec = 1.0 / cos_pi_frac(1, den);
  }
  KappaPair k;
  k.kappa1 = (6.0 * c2 + 4.0 * c4 + 2.0 * c6 + 5.0) / 32.0 * sec * sec * sec * sec;
  k.kappa2 = (c4 - c2 + 1.0) / 8.0 * sec * sec;
  return k;
}

}  // namespace aqw
