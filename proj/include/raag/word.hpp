#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

/// A generator or its inverse.
struct Letter {
  VertexId vertex;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {vertex, -sign}; }

  friend constexpr bool operator==(Letter, Letter) = default;
  /// Total letter order: vertex index ascending, then +1 before -1.
  friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
    if (auto c = x.vertex <=> y.vertex; c != 0) return c;
    return y.sign <=> x.sign;
  }
};

/// Arbitrary (possibly unreduced) sequence of letters.
using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

/// Parses `name`, `name^-1`, `name^k` tokens separated by whitespace.
/// `1` alone denotes the empty word.
Word parse_word(const SimplicialGraph& g, std::string_view text);
/// One token per letter; the empty word prints as `1`.
std::string format_word(const SimplicialGraph& g, const Word& w);

/// Element of the right-angled Artin group, stored as its shortlex-least
/// geodesic representative. Equality is equality of those representatives.
class RaagElement {
 public:
  static RaagElement identity(GraphPtr g);
  static RaagElement generator(GraphPtr g, VertexId v, int sign = 1);

  const GraphPtr& graph() const noexcept { return graph_; }
  const Word& word() const noexcept { return nf_; }
  std::size_t length() const noexcept { return nf_.size(); }
  bool is_identity() const noexcept { return nf_.empty(); }

  friend bool operator==(const RaagElement& x, const RaagElement& y) {
    return x.graph_ == y.graph_ && x.nf_ == y.nf_;
  }

 private:
  RaagElement(GraphPtr g, Word nf) : graph_(std::move(g)), nf_(std::move(nf)) {}
  friend RaagElement reduce(GraphPtr g, const Word& w);

  GraphPtr graph_;
  Word nf_;
};

/// Cancels every letter/inverse pair separated only by letters commuting
/// with it. Keeps the surviving letters in their original order.
Word free_reduce(const SimplicialGraph& g, const Word& w);

/// Least word under the letter order among all rearrangements of `w` by
/// swaps of adjacent commuting letters.
Word lex_normal_form(const SimplicialGraph& g, const Word& w);

/// Canonical normal form of the element represented by `w`.
RaagElement reduce(GraphPtr g, const Word& w);

RaagElement multiply(const RaagElement& x, const RaagElement& y);
RaagElement invert(const RaagElement& x);
/// by * x * by^-1
RaagElement conjugate(const RaagElement& x, const RaagElement& by);
RaagElement power(const RaagElement& x, long long k);

inline RaagElement operator*(const RaagElement& x, const RaagElement& y) { return multiply(x, y); }

/// Signed count of letters per vertex (the image in the abelianization).
std::vector<long long> exponent_sums(const SimplicialGraph& g, const Word& w);
std::vector<long long> exponent_sums(const RaagElement& x);

/// True iff every letter of the normal form is a central vertex.
bool is_central(const RaagElement& x);

inline constexpr std::size_t kDefaultOracleBudget = 1'000'000;

/// Brute-force equality: breadth-first search from w1^-1 w2 over commuting
/// swaps and adjacent free cancellations, looking for the empty word.
/// Independent of reduce(). Throws InconclusiveError once more than
/// `budget` distinct words have been visited without deciding.
bool oracle_equal(const SimplicialGraph& g, const Word& w1, const Word& w2,
                  std::size_t budget = kDefaultOracleBudget);

}  // namespace raag
