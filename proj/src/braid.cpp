#include "aqw/braid.hpp"

namespace aqw {

BraidWord inverse(const BraidWord& word) {
  BraidWord out;
  out.strand_count = word.strand_count;
  out.letters.reserve(word.letters.size());
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    out.letters.push_back({it->index, -it->sign});
  }
  return out;
}

}  // namespace aqw
