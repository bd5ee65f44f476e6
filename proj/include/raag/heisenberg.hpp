#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

/// Element A^m B^n C^p of the integer Heisenberg group, with C central and
/// B A B^-1 = C A (so the commutator [B, A] = B A B^-1 A^-1 is C).
///
/// Coordinates are the unique normal form, so triple equality is group
/// equality. All arithmetic is overflow-checked (std::overflow_error).
struct HeisElement {
  std::int64_t m = 0;  // exponent of A
  std::int64_t n = 0;  // exponent of B
  std::int64_t p = 0;  // exponent of C

  friend constexpr bool operator==(const HeisElement&, const HeisElement&) = default;

  static constexpr HeisElement A() { return {1, 0, 0}; }
  static constexpr HeisElement B() { return {0, 1, 0}; }
  static constexpr HeisElement C() { return {0, 0, 1}; }

  bool is_identity() const { return m == 0 && n == 0 && p == 0; }
};

/// (m, n, p)(m', n', p') = (m + m', n + n', p + p' + n m').
HeisElement h_multiply(const HeisElement& x, const HeisElement& y);
HeisElement h_inverse(const HeisElement& x);
HeisElement h_power(const HeisElement& x, std::int64_t k);
/// x y x^-1 y^-1 = (0, 0, x.n y.m - y.n x.m).
HeisElement h_commutator(const HeisElement& x, const HeisElement& y);
/// Image (m, n) in the rank-2 abelianization.
std::pair<std::int64_t, std::int64_t> h_abelianization(const HeisElement& x);

inline HeisElement operator*(const HeisElement& x, const HeisElement& y) { return h_multiply(x, y); }

enum class HeisGenerator { A, B, C };

struct HeisLetter {
  HeisGenerator generator;
  int sign = 1;

  friend constexpr bool operator==(const HeisLetter&, const HeisLetter&) = default;
};

using HeisWord = std::vector<HeisLetter>;

/// Tokens `A`, `B^-1`, `C^3`, whitespace-separated; `1` is the empty word.
HeisWord parse_heis_word(std::string_view text);
std::string format_heis_word(const HeisWord& w);
/// Left-to-right product of the letters.
HeisElement h_evaluate(const HeisWord& w);
/// The word A^m B^n C^p.
HeisWord normal_form_word(const HeisElement& x);

std::string format_heis(const HeisElement& x);

}  // namespace raag
