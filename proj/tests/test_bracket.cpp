#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "doctest.h"

#include "aqw/bracket.hpp"
#include "aqw/moments.hpp"

using namespace aqw;
using complexd = std::complex<double>;

namespace {

// Deterministic word generator for the property checks.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

BraidWord random_word(std::uint64_t seed, int strands, int length) {
  BraidWord w;
  w.strand_count = strands;
  for (int i = 0; i < length; ++i) {
    const std::uint64_t h = mix(seed * 131 + i);
    w.letters.push_back({1 + static_cast<int>(h % (strands - 1)),
                         (h >> 32) % 2 == 0 ? +1 : -1});
  }
  return w;
}

}  // namespace

TEST_CASE("unknot and free loops") {
  const AnyonModel m = make_model(3);
  CHECK(std::abs(state_sum_bracket({1, {}}, m.kauffman_a) - complexd(1.0)) < 1e-15);
  const complexd a2 = m.kauffman_a * m.kauffman_a;
  const complexd one_loop = -(a2 + 1.0 / a2);
  CHECK(std::abs(state_sum_bracket({2, {}}, m.kauffman_a) - one_loop) < 1e-14);
}

TEST_CASE("Hopf link bracket") {
  // Expanding the four smoothing states of b_1^2 by hand gives -A^4 - A^-4.
  for (int k : {2, 3, 5}) {
    const AnyonModel m = make_model(k);
    const complexd a4 = std::pow(m.kauffman_a, 4);
    const BraidWord hopf{2, {{1, +1}, {1, +1}}};
    CHECK(std::abs(state_sum_bracket(hopf, m.kauffman_a) - (-a4 - 1.0 / a4)) < 1e-13);
  }
}

TEST_CASE("letter budget enforced") {
  BraidWord w;
  w.strand_count = 3;
  for (int i = 0; i < kMaxStateSumLetters + 1; ++i) w.letters.push_back({1, +1});
  CHECK_THROWS_AS(state_sum_bracket(w, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(state_sum_bracket({2, {{5, +1}}}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("untouched strands drop out of the expectation") {
  const AnyonModel m = make_model(4);
  const BraidWord small{6, {{3, +1}, {4, -1}, {3, +1}}};
  BraidWord padded = small;
  padded.strand_count = 14;  // eight extra strands never touched
  const complexd a = markov_expectation(small, m);
  const complexd b = markov_expectation(padded, m);
  CHECK(std::abs(a - b) < 1e-14);
}

TEST_CASE("empty word has unit expectation") {
  const AnyonModel m = make_model(3);
  CHECK(markov_expectation({5, {}}, m) == complexd(1.0));
}

TEST_CASE("unitarity: W W^dag has unit expectation") {
  const AnyonModel m = make_model(5);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    BraidWord w = random_word(seed, 9, 1 + static_cast<int>(seed % 6));
    const BraidWord w_dag = inverse(w);
    BraidWord closed = w;
    closed.letters.insert(closed.letters.end(), w_dag.letters.begin(), w_dag.letters.end());
    CHECK(std::abs(markov_expectation(closed, m) - complexd(1.0)) < 1e-10);
  }
}

TEST_CASE("conjugation: expectation of W^dag conjugates") {
  for (int k : {2, 3, kLevelInfinity}) {
    const AnyonModel m = make_model(k);
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
      const BraidWord w = random_word(seed, 8, 5);
      const complexd forward = markov_expectation(w, m);
      const complexd backward = markov_expectation(inverse(w), m);
      CHECK(std::abs(std::conj(forward) - backward) < 1e-10);
    }
  }
}

TEST_CASE("word b_s b_s^dag reduces to the identity") {
  const AnyonModel m = make_model(7);
  const BraidWord w{5, {{2, +1}, {2, -1}}};
  CHECK(std::abs(markov_expectation(w, m) - complexd(1.0)) < 1e-12);
}

TEST_CASE("spec moment words") {
  // <b+2_{s'} b^2_s> at offset 1, k = 2: (A^4 + A^-4)^2 / d^2 = 0.
  const AnyonModel ising = make_model(2);
  const complexd f4 =
      markov_expectation(family_word_at_offset(MomentFamily::kStayStayRight, 1), ising);
  CHECK(std::abs(f4) < 1e-14);

  // <b+2_{s'} b_{s-2} b_{s-1}> at a disjoint offset, k = 3: -A^6 (A^4+A^-4)/d^3.
  const AnyonModel fib = make_model(3);
  const complexd a = fib.kauffman_a;
  const double d = fib.quantum_dimension;
  const complexd expected =
      -std::pow(a, 6) * (std::pow(a, 4) + std::pow(a, -4)) / (d * d * d);
  const complexd oracle =
      markov_expectation(family_word_at_offset(MomentFamily::kDownStay, 6), fib);
  CHECK(std::abs(oracle - expected) < 1e-13);
}

TEST_CASE("disjointness: family moments constant for |offset| >= 4") {
  const AnyonModel m = make_model(5);
  for (MomentFamily family : kAllMomentFamilies) {
    const complexd far = markov_expectation(family_word_at_offset(family, 12), m);
    for (int offset : {4, 5, 6, 7, 8, -4, -5, -6, -7, -8}) {
      const complexd v = markov_expectation(family_word_at_offset(family, offset), m);
      CHECK(std::abs(v - far) < 1e-12);
    }
  }
}

TEST_CASE("k=1 families are trivial") {
  const AnyonModel m = make_model(1);
  for (MomentFamily family : kAllMomentFamilies) {
    for (int offset = -4; offset <= 4; ++offset) {
      const complexd v = markov_expectation(family_word_at_offset(family, offset), m);
      CHECK(std::abs(v - complexd(1.0)) < 1e-10);
    }
  }
}
