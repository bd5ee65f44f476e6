#include <doctest.h>

#include <array>
#include <limits>
#include <random>
#include <stdexcept>

#include "raag/errors.hpp"
#include "raag/heisenberg.hpp"

using namespace raag;

namespace {

// Independent model: upper unitriangular 3x3 integer matrices with
// B = I + E12, A = I + E23, C = I + E13, so B A B^-1 A^-1 = C.
using Mat = std::array<std::array<long long, 3>, 3>;

Mat mul(const Mat& x, const Mat& y) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += x[i][k] * y[k][j];
  return r;
}

Mat identity() { return Mat{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

Mat gen(HeisGenerator g, int sign) {
  Mat m = identity();
  if (g == HeisGenerator::A) m[1][2] = sign;
  if (g == HeisGenerator::B) m[0][1] = sign;
  if (g == HeisGenerator::C) m[0][2] = sign;
  return m;
}

Mat mat_of_word(const HeisWord& w) {
  Mat acc = identity();
  for (const auto& l : w) acc = mul(acc, gen(l.generator, l.sign));
  return acc;
}

// A^m B^n C^p as a matrix: [[1, n, p], [0, 1, m], [0, 0, 1]].
Mat mat_of(const HeisElement& x) { return mat_of_word(normal_form_word(x)); }

HeisElement random_element(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("matrix oracle sanity") {
  CHECK(mat_of({2, 3, 5}) == Mat{{{1, 3, 5}, {0, 1, 2}, {0, 0, 1}}});
}

TEST_CASE("h_multiply") {
  const HeisElement id{};
  CHECK(h_multiply(id, {4, -2, 7}) == HeisElement{4, -2, 7});
  // Both values frozen from the matrix model.
  CHECK(mat_of_word(parse_heis_word("B A")) == mat_of({1, 1, 1}));
  CHECK(h_multiply(HeisElement::B(), HeisElement::A()) == HeisElement{1, 1, 1});
  CHECK(mat_of_word(parse_heis_word("A B")) == mat_of({1, 1, 0}));
  CHECK(h_multiply(HeisElement::A(), HeisElement::B()) == HeisElement{1, 1, 0});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto x = random_element(rng, 6), y = random_element(rng, 6), z = random_element(rng, 6);
    CHECK(mat_of(h_multiply(x, y)) == mul(mat_of(x), mat_of(y)));
    CHECK(h_multiply(h_multiply(x, y), z) == h_multiply(x, h_multiply(y, z)));
  }
}

TEST_CASE("h_inverse and h_power") {
  CHECK(h_inverse(HeisElement::A()) == HeisElement{-1, 0, 0});
  // Solved from h_multiply((1,1,0), z) = 0: z = (-1, -1, 1); the matrix
  // model and the word B^-1 A^-1 agree.
  CHECK(h_multiply(HeisElement{1, 1, 0}, HeisElement{-1, -1, 1}).is_identity());
  CHECK(h_evaluate(parse_heis_word("B^-1 A^-1")) == HeisElement{-1, -1, 1});
  CHECK(h_inverse(HeisElement{1, 1, 0}) == HeisElement{-1, -1, 1});

  for (std::int64_t k = -6; k <= 6; ++k) CHECK(h_power(HeisElement::C(), k) == HeisElement{0, 0, k});

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_element(rng, 9);
    CHECK(h_multiply(x, h_inverse(x)).is_identity());
    CHECK(h_multiply(h_inverse(x), x).is_identity());
    HeisElement acc{};
    for (int k = 0; k <= 5; ++k) {
      CHECK(h_power(x, k) == acc);
      CHECK(h_power(x, -k) == h_inverse(acc));
      acc = h_multiply(acc, x);
    }
  }
}

TEST_CASE("h_commutator") {
  CHECK(h_commutator(HeisElement::B(), HeisElement::A()) == HeisElement::C());
  CHECK(h_evaluate(parse_heis_word("B A B^-1 A^-1")) == HeisElement::C());
  for (std::int64_t k = 1; k <= 6; ++k) {
    const auto bk = h_power(HeisElement::B(), k);
    const auto ak = h_power(HeisElement::A(), k);
    // Brute force: multiply out B^k A^k B^-k A^-k letter by letter.
    const auto brute = h_multiply(h_multiply(bk, ak), h_multiply(h_inverse(bk), h_inverse(ak)));
    CHECK(brute == HeisElement{0, 0, k * k});
    CHECK(h_commutator(bk, ak) == brute);
  }

  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_element(rng, 5), y = random_element(rng, 5), z = random_element(rng, 5);
    CHECK(h_commutator(x, x).is_identity());
    CHECK(h_commutator(x, y) == h_multiply(h_multiply(x, y), h_multiply(h_inverse(x), h_inverse(y))));
    CHECK(h_commutator(h_commutator(x, y), z).is_identity());
  }
}

TEST_CASE("h_abelianization") {
  CHECK(h_abelianization({2, -1, 5}) == std::pair<std::int64_t, std::int64_t>{2, -1});
  CHECK(h_abelianization(HeisElement::C()) == std::pair<std::int64_t, std::int64_t>{0, 0});
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_element(rng, 7), y = random_element(rng, 7);
    const auto s = h_abelianization(h_multiply(x, y));
    CHECK(s.first == x.m + y.m);
    CHECK(s.second == x.n + y.n);
  }
}

TEST_CASE("h_evaluate") {
  CHECK(h_evaluate(parse_heis_word("A B A^-1 B^-1")) == HeisElement{0, 0, -1});
  CHECK(h_evaluate({}) == HeisElement{});
  CHECK(h_evaluate(parse_heis_word("1")) == HeisElement{});
  CHECK(h_evaluate(parse_heis_word("A^2 B^3 C^-1")) == HeisElement{2, 3, -1});
  CHECK(format_heis_word(parse_heis_word("A^2 C^-1")) == "A A C^-1");
  CHECK_THROWS_AS(parse_heis_word("D"), LookupError);
  CHECK_THROWS_AS(parse_heis_word("A^0"), ParseError);

  SUBCASE("constant under one defining-relation rewrite") {
    // Relators: A C A^-1 C^-1, B C B^-1 C^-1, B A B^-1 A^-1 C^-1, plus free
    // cancellation pairs. Inserting any of them (or its inverse) anywhere
    // must not change the value.
    const std::vector<HeisWord> relators = {
        parse_heis_word("A C A^-1 C^-1"), parse_heis_word("B C B^-1 C^-1"),
        parse_heis_word("B A B^-1 A^-1 C^-1"), parse_heis_word("A A^-1"), parse_heis_word("C^-1 C")};
    const std::vector<HeisLetter> letters = {{HeisGenerator::A, 1},  {HeisGenerator::A, -1}, {HeisGenerator::B, 1},
                                             {HeisGenerator::B, -1}, {HeisGenerator::C, 1},  {HeisGenerator::C, -1}};
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<std::size_t> pick_letter(0, letters.size() - 1);
    std::uniform_int_distribution<std::size_t> pick_rel(0, relators.size() - 1);
    std::uniform_int_distribution<int> len(0, 10);
    for (int trial = 0; trial < 2000; ++trial) {
      HeisWord word(static_cast<std::size_t>(len(rng)));
      for (auto& l : word) l = letters[pick_letter(rng)];
      HeisWord rel = relators[pick_rel(rng)];
      if (trial % 2) {
        HeisWord inv;
        for (auto it = rel.rbegin(); it != rel.rend(); ++it) inv.push_back({it->generator, -it->sign});
        rel = inv;
      }
      std::uniform_int_distribution<std::size_t> at(0, word.size());
      HeisWord rewritten = word;
      rewritten.insert(rewritten.begin() + static_cast<std::ptrdiff_t>(at(rng)), rel.begin(), rel.end());
      CHECK(h_evaluate(rewritten) == h_evaluate(word));
      CHECK(mat_of_word(word) == mat_of(h_evaluate(word)));
    }
  }
}

TEST_CASE("normal form uniqueness and torsion-freeness at desk scale") {
  for (int m = -3; m <= 3; ++m) {
    for (int n = -3; n <= 3; ++n) {
      for (int p = -3; p <= 3; ++p) {
        const HeisElement x{m, n, p};
        CHECK(h_evaluate(normal_form_word(x)) == x);
        CHECK(h_evaluate(normal_form_word(x)).is_identity() == (m == 0 && n == 0 && p == 0));
        for (int k = 1; k <= 5; ++k) {
          if (h_power(x, k).is_identity()) CHECK(x.is_identity());
        }
      }
    }
  }
}

TEST_CASE("overflow is reported, never wrapped") {
  constexpr auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(h_multiply({big, 0, 0}, {1, 0, 0}), std::overflow_error);
  CHECK_THROWS_AS(h_commutator({0, big, 0}, {2, 0, 0}), std::overflow_error);
  CHECK(h_power(HeisElement::C(), big) == HeisElement{0, 0, big});
  CHECK_THROWS_AS(h_multiply(h_power(HeisElement::C(), big), HeisElement::C()), std::overflow_error);
  CHECK_NOTHROW(h_power({0, 0, 1}, big - 1));
  CHECK_THROWS_AS(h_commutator(h_power(HeisElement::B(), 1LL << 32), h_power(HeisElement::A(), 1LL << 32)),
                  std::overflow_error);
}
