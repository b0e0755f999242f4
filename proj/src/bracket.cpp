#include "aqw/bracket.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqw {
namespace {

// Flat union-find over segment endpoints. Sized once per call, reset per state.
class UnionFind {
 public:
  explicit UnionFind(int capacity) : parent_(capacity) {}

  void reset(int n) {
    size_ = n;
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[a] = b;
  }

  int component_count() {
    int count = 0;
    for (int i = 0; i < size_; ++i) {
      if (find(i) == i) ++count;
    }
    return count;
  }

 private:
  std::vector<int> parent_;
  int size_ = 0;
};

void validate(const BraidWord& word) {
  if (static_cast<int>(word.letters.size()) > kMaxStateSumLetters) {
    throw std::invalid_argument("state sum limited to " + std::to_string(kMaxStateSumLetters) +
                                " letters, got " + std::to_string(word.letters.size()));
  }
  if (word.strand_count < 1) {
    throw std::invalid_argument("braid word needs at least one strand");
  }
  for (const BraidLetter& l : word.letters) {
    if (l.index < 1 || l.index >= word.strand_count) {
      throw std::invalid_argument("braid letter index " + std::to_string(l.index) +
                                  " outside [1, " + std::to_string(word.strand_count) + ")");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw std::invalid_argument("braid letter sign must be +1 or -1");
    }
  }
}

}  // namespace

std::complex<double> state_sum_bracket(const BraidWord& word, std::complex<double> kauffman_a) {
  validate(word);
  const int strands = word.strand_count;
  const int c = static_cast<int>(word.letters.size());
  const std::complex<double> a_inv = 1.0 / kauffman_a;
  const std::complex<double> loop_value = -(kauffman_a * kauffman_a + a_inv * a_inv);

  // Powers of A and of the loop value cover every reachable exponent.
  std::vector<std::complex<double>> a_pow(2 * c + 1), loop_pow(strands + c + 1);
  a_pow[c] = 1.0;
  for (int i = 1; i <= c; ++i) {
    a_pow[c + i] = a_pow[c + i - 1] * kauffman_a;
    a_pow[c - i] = a_pow[c - i + 1] * a_inv;
  }
  loop_pow[0] = 1.0;
  for (int i = 1; i <= strands + c; ++i) loop_pow[i] = loop_pow[i - 1] * loop_value;

  UnionFind uf(strands + c);
  std::vector<int> current(strands);
  std::complex<double> total = 0.0;

  for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
    int nodes = strands;
    for (int j = 0; j < strands; ++j) current[j] = j;
    uf.reset(strands + c);
    int exponent = 0;
    for (int i = 0; i < c; ++i) {
      const BraidLetter& l = word.letters[i];
      const bool cap = ((mask >> i) & 1u) != 0;
      exponent += (cap ? -1 : +1) * l.sign;
      if (cap) {
        uf.unite(current[l.index - 1], current[l.index]);
        const int fresh = nodes++;
        current[l.index - 1] = fresh;
        current[l.index] = fresh;
      }
    }
    // Markov closure: each strand's top joins its own bottom.
    for (int j = 0; j < strands; ++j) uf.unite(current[j], j);
    // Only the first `nodes` entries were used this state.
    int loops = 0;
    for (int x = 0; x < nodes; ++x) {
      if (uf.find(x) == x) ++loops;
    }
    total += a_pow[c + exponent] * loop_pow[loops - 1];
  }
  return total;
}

std::complex<double> markov_expectation(const BraidWord& word, const AnyonModel& model) {
  validate(word);
  if (word.letters.empty()) return 1.0;

  // Drop strands the word never touches and renumber the rest.
  std::vector<int> touched;
  for (const BraidLetter& l : word.letters) {
    touched.push_back(l.index);
    touched.push_back(l.index + 1);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  std::vector<int> rank(word.strand_count + 2, 0);
  for (std::size_t i = 0; i < touched.size(); ++i) rank[touched[i]] = static_cast<int>(i) + 1;

  BraidWord restricted;
  restricted.strand_count = static_cast<int>(touched.size());
  restricted.letters.reserve(word.letters.size());
  for (const BraidLetter& l : word.letters) {
    restricted.letters.push_back({rank[l.index], l.sign});
  }

  const std::complex<double> bracket = state_sum_bracket(restricted, model.kauffman_a);
  double norm = 1.0;
  for (int i = 1; i < restricted.strand_count; ++i) norm *= model.quantum_dimension;
  return bracket / norm;
}

}  // namespace aqw
