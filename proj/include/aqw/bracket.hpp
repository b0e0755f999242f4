#pragma once

#include <complex>

#include "aqw/anyon_model.hpp"
#include "aqw/braid.hpp"

namespace aqw {

/// Hard cap on the state-sum enumeration (2^letters smoothing states).
inline constexpr int kMaxStateSumLetters = 24;

/// Kauffman bracket <L>(A) of the Markov closure of `word`, evaluated by the
/// full state sum: every crossing is resolved into the two planar smoothings,
/// loops in the closed diagram are counted with union-find, and each state
/// contributes A^(a-b) (-A^2 - A^-2)^(loops-1).
///
/// A positive letter b_s resolves as A * (strands pass by) + A^-1 * (cap-cup);
/// the inverse letter swaps the two weights. This orientation of the skein
/// relation is the one that reproduces the closed-form expectation table (the
/// opposite choice conjugates every bracket).
///
/// Throws std::invalid_argument if the word has more than kMaxStateSumLetters
/// letters or a letter index outside [1, strand_count).
std::complex<double> state_sum_bracket(const BraidWord& word, std::complex<double> kauffman_a);

/// Markov-closure expectation value <Phi_0| B |Phi_0> = <L>(A) / d^(n-1),
/// where n counts the strands of the closed diagram. Strands never touched by
/// a letter are dropped before the state sum; each dropped strand multiplies
/// <L> by d and n by one, so the quotient is unchanged.
std::complex<double> markov_expectation(const BraidWord& word, const AnyonModel& model);

}  // namespace aqw
