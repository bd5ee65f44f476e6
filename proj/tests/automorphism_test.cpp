#include <doctest.h>

#include "raag/automorphism.hpp"
#include "raag/errors.hpp"
#include "test_support.hpp"

using namespace raag;
using namespace raag::testing;

namespace {

std::string image(const RaagAut& f, const GraphPtr& g, const char* word) { return nf(apply(f, el(g, word))); }

}  // namespace

TEST_CASE("inner automorphisms") {
  auto g = p4();
  CHECK(is_identity(RaagAut::inner(RaagElement::identity(g))));
  CHECK(image(RaagAut::inner(g, v(g, "b")), g, "a") == "a");
  CHECK(image(RaagAut::inner(g, v(g, "a")), g, "c") == "a c a^-1");
  CHECK(format_aut(RaagAut::inner(g, v(g, "a"))) ==
        std::vector<std::string>{"a -> a", "b -> b", "c -> a c a^-1", "d -> a d a^-1"});
}

TEST_CASE("transvections") {
  auto g = p4();
  const auto t = RaagAut::transvection(g, v(g, "a"), v(g, "b"));
  CHECK(format_aut(t) == std::vector<std::string>{"a -> a b", "b -> b", "c -> c", "d -> d"});
  CHECK(nf(t.inverse_image(v(g, "a"))) == "a b^-1");

  CHECK_THROWS_AS(RaagAut::transvection(g, v(g, "b"), v(g, "a")), LegalityError);
  try {
    RaagAut::transvection(g, v(g, "b"), v(g, "a"));
  } catch (const LegalityError& e) {
    CHECK(std::string(e.what()) == "domination fails: c in lk(b) but not st(a)");
  }
  CHECK_THROWS_AS(RaagAut::transvection(g, v(g, "a"), v(g, "a")), UsageError);

  auto e = share(SimplicialGraph::parse_string("vertices: a b\n"));
  const auto te = RaagAut::transvection(e, v(e, "a"), v(e, "b"));
  CHECK(image(te, e, "a") == "a b");
}

TEST_CASE("apply") {
  auto g = p4();
  const auto t = RaagAut::transvection(g, v(g, "a"), v(g, "b"));
  CHECK(image(t, g, "a") == "a b");
  CHECK(image(t, g, "a^-1") == "a^-1 b^-1");
  CHECK(apply(t, el(g, "a^-1")) == invert(el(g, "a b")));

  const auto c_a = RaagAut::inner(g, v(g, "a"));
  const auto c_b = RaagAut::inner(g, v(g, "b"));
  // t c_a t^-1 on a, expanded by hand.
  CHECK(apply(compose(t, c_a, inverse(t)), el(g, "a")) == el(g, "a b a b b^-1 b^-1 a^-1"));
  CHECK(apply(compose(t, c_a, inverse(t)), el(g, "a")) == apply(compose(c_b, c_a), el(g, "a")));

  CHECK_THROWS_AS(apply(t, el(p4(), "a")), UsageError);
}

TEST_CASE("compose, inverse, power, equals") {
  auto g = p4();
  const auto id = RaagAut::identity(g);
  const auto t = RaagAut::transvection(g, v(g, "a"), v(g, "b"));
  const auto c_a = RaagAut::inner(g, v(g, "a"));
  const auto c_b = RaagAut::inner(g, v(g, "b"));

  CHECK(compose(t, id) == t);
  CHECK(compose(id, t) == t);
  CHECK(compose(c_a, c_b) == compose(c_b, c_a));
  CHECK(compose(c_b, c_a) == RaagAut::inner(el(g, "a b")));

  CHECK(inverse(id) == id);
  CHECK(format_aut(inverse(t)).front() == "a -> a b^-1");
  CHECK(inverse(RaagAut::inner(el(g, "a c"))) == RaagAut::inner(invert(el(g, "a c"))));
  CHECK(is_identity(compose(t, inverse(t))));

  for (long long n = -4; n <= 4; ++n) {
    Word expected = w(g, "a");
    expected.insert(expected.end(), static_cast<std::size_t>(n < 0 ? -n : n), Letter{v(g, "b"), n < 0 ? -1 : 1});
    CHECK(apply(power(t, n), el(g, "a")) == reduce(g, expected));
  }
  CHECK(power(t, 1) == t);
  CHECK(power(t, 0) == id);
  CHECK(power(t, -2) == compose(inverse(t), inverse(t)));
  for (long long m = -4; m <= 4; ++m) {
    CHECK(power(c_a, m) == RaagAut::inner(power(el(g, "a"), m)));
  }

  CHECK(compose(t, c_b) == compose(c_b, t));
  CHECK_FALSE(equals(t, c_b));
  CHECK(apply(t, el(g, "a")) != apply(c_b, el(g, "a")));

  CHECK_THROWS_AS(compose(t, RaagAut::identity(p4())), UsageError);
  CHECK_THROWS_AS(equals(t, RaagAut::identity(p4())), UsageError);
}

TEST_CASE("constructor rejects a mismatched inverse table") {
  auto g = p4();
  const auto t = RaagAut::transvection(g, v(g, "a"), v(g, "b"));
  auto bwd = t.inverse_images();
  bwd[0] = el(g, "a b");  // should be a b^-1
  CHECK_THROWS_AS(RaagAut(g, t.images(), bwd), InverseMismatchError);

  // A non-injective image table has no valid inverse.
  std::vector<RaagElement> collapse(g->size(), el(g, "a"));
  CHECK_THROWS_AS(RaagAut(g, collapse, collapse), InverseMismatchError);

  std::vector<RaagElement> short_table(2, el(g, "a"));
  CHECK_THROWS_AS(RaagAut(g, short_table, short_table), UsageError);
}

TEST_CASE("apply is a homomorphism") {
  std::mt19937_64 rng(4242);
  for (const auto& g : {p4(), star3_pendant()}) {
    std::vector<RaagAut> autos{RaagAut::identity(g)};
    for (VertexId x : g->vertices()) autos.push_back(RaagAut::inner(g, x));
    for (auto [x, y] : g->adjacent_transvection_pairs()) autos.push_back(RaagAut::transvection(g, x, y));
    autos.push_back(compose(autos.back(), autos[1], inverse(autos.back())));

    for (const auto& f : autos) {
      for (int trial = 0; trial < 100; ++trial) {
        const auto x = reduce(g, random_word(*g, rng, 6));
        const auto y = reduce(g, random_word(*g, rng, 6));
        CHECK(apply(f, x * y) == apply(f, x) * apply(f, y));
        CHECK(apply(f, invert(x)) == invert(apply(f, x)));
        CHECK(apply(inverse(f), apply(f, x)) == x);
      }
    }
  }
}

TEST_CASE("inner is a homomorphism with kernel the center") {
  std::mt19937_64 rng(11);
  auto g = p4();
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = reduce(g, random_word(*g, rng, 5));
    const auto y = reduce(g, random_word(*g, rng, 5));
    CHECK(compose(RaagAut::inner(x), RaagAut::inner(y)) == RaagAut::inner(x * y));
  }
  for (const auto& h : {p4(), k3(), star3()}) {
    for (const auto& x : elements_up_to(h, 2)) CHECK(is_identity(RaagAut::inner(x)) == is_central(x));
  }
}

TEST_CASE("composition is associative") {
  auto g = star3_pendant();
  std::vector<RaagAut> autos;
  for (VertexId x : g->vertices()) autos.push_back(RaagAut::inner(g, x));
  for (auto [x, y] : g->adjacent_transvection_pairs()) autos.push_back(RaagAut::transvection(g, x, y));
  for (const auto& f : autos) {
    for (const auto& h : autos) {
      for (const auto& k : autos) CHECK(compose(compose(f, h), k) == compose(f, compose(h, k)));
    }
  }
}
