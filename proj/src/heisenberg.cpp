#include "raag/heisenberg.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "raag/errors.hpp"

namespace raag {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Heisenberg coordinate overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("Heisenberg coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Heisenberg coordinate overflow");
  return r;
}

char generator_char(HeisGenerator g) {
  switch (g) {
    case HeisGenerator::A: return 'A';
    case HeisGenerator::B: return 'B';
    case HeisGenerator::C: return 'C';
  }
  return '?';
}

}  // namespace

HeisElement h_multiply(const HeisElement& x, const HeisElement& y) {
  return {checked_add(x.m, y.m), checked_add(x.n, y.n), checked_add(checked_add(x.p, y.p), checked_mul(x.n, y.m))};
}

HeisElement h_inverse(const HeisElement& x) {
  // (m,n,p)^-1 = (-m, -n, -p + n m)
  return {checked_sub(0, x.m), checked_sub(0, x.n), checked_add(checked_sub(0, x.p), checked_mul(x.n, x.m))};
}

HeisElement h_power(const HeisElement& x, std::int64_t k) {
  HeisElement base = k < 0 ? h_inverse(x) : x;
  HeisElement result{};
  std::uint64_t e = k < 0 ? 0ull - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  for (; e > 0; e >>= 1) {
    if (e & 1u) result = h_multiply(result, base);
    if (e > 1) base = h_multiply(base, base);
  }
  return result;
}

HeisElement h_commutator(const HeisElement& x, const HeisElement& y) {
  return {0, 0, checked_sub(checked_mul(x.n, y.m), checked_mul(y.n, x.m))};
}

std::pair<std::int64_t, std::int64_t> h_abelianization(const HeisElement& x) { return {x.m, x.n}; }

HeisWord parse_heis_word(std::string_view text) {
  HeisWord out;
  std::size_t i = 0;
  std::vector<std::string_view> tokens;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.size() == 1 && tokens.front() == "1") return out;

  for (std::string_view token : tokens) {
    auto caret = token.find('^');
    std::string_view name = token.substr(0, caret);
    HeisGenerator gen;
    if (name == "A") {
      gen = HeisGenerator::A;
    } else if (name == "B") {
      gen = HeisGenerator::B;
    } else if (name == "C") {
      gen = HeisGenerator::C;
    } else {
      throw LookupError("unknown Heisenberg generator '" + std::string(name) + "'");
    }
    long long exponent = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = token.substr(caret + 1);
      auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || exponent == 0) {
        throw ParseError(0, "bad exponent in token '" + std::string(token) + "'");
      }
    }
    out.insert(out.end(), static_cast<std::size_t>(exponent > 0 ? exponent : -exponent),
               HeisLetter{gen, exponent > 0 ? 1 : -1});
  }
  return out;
}

std::string format_heis_word(const HeisWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += generator_char(w[i].generator);
    if (w[i].sign < 0) out += "^-1";
  }
  return out;
}

HeisElement h_evaluate(const HeisWord& w) {
  HeisElement acc{};
  for (const auto& letter : w) {
    HeisElement g = letter.generator == HeisGenerator::A   ? HeisElement::A()
                    : letter.generator == HeisGenerator::B ? HeisElement::B()
                                                           : HeisElement::C();
    acc = h_multiply(acc, letter.sign > 0 ? g : h_inverse(g));
  }
  return acc;
}

HeisWord normal_form_word(const HeisElement& x) {
  HeisWord out;
  auto emit = [&](HeisGenerator g, std::int64_t e) {
    for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out.push_back({g, e > 0 ? 1 : -1});
  };
  emit(HeisGenerator::A, x.m);
  emit(HeisGenerator::B, x.n);
  emit(HeisGenerator::C, x.p);
  return out;
}

std::string format_heis(const HeisElement& x) {
  return "(" + std::to_string(x.m) + "," + std::to_string(x.n) + "," + std::to_string(x.p) + ")";
}

}  // namespace raag
