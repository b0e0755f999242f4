#pragma once

#include <vector>

namespace aqw {

/// One braid generator: b_index for sign = +1, its inverse for sign = -1.
/// index s exchanges strands s and s+1 (strands are 1-based).
struct BraidLetter {
  int index = 1;
  int sign = +1;
};

/// A braid word. Letters are stored in application order (first letter acts
/// first), i.e. bottom to top of the strand diagram.
struct BraidWord {
  int strand_count = 1;
  std::vector<BraidLetter> letters;
};

/// The word with every letter inverted and the order reversed.
BraidWord inverse(const BraidWord& word);

}  // namespace aqw
