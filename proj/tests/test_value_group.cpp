#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "valext/errors.hpp"
#include "valext/value_group.hpp"

using namespace valext;

namespace {

ValueWithZero V(const ValueGroup& g, std::vector<std::int64_t> c) { return ValueWithZero::from_integers(g, c); }

ValueWithZero random_value(const ValueGroup& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-6, 6);
  if (d(rng) == 6) return ValueWithZero::zero(g);
  std::vector<std::int64_t> nums(g.rank());
  for (auto& n : nums) n = d(rng);
  return ValueWithZero::from_numerators(g, nums);
}

}  // namespace

TEST_CASE("groups print and embed") {
  CHECK(ValueGroup(1).to_string() == "Z lex");
  CHECK(ValueGroup(2).to_string() == "Z^2 lex");
  CHECK(ValueGroup(1, 2, 1).to_string() == "(1/2)Z lex");
  CHECK(ValueGroup(1).embeds_in(ValueGroup(1, 2, 3)));
  CHECK_FALSE(ValueGroup(1, 2, 1).embeds_in(ValueGroup(1)));
  CHECK_FALSE(ValueGroup(1).embeds_in(ValueGroup(2)));
  CHECK_THROWS_AS(ValueGroup(0), StructuralError);
  CHECK_THROWS_AS(ValueGroup(4), StructuralError);
  CHECK_THROWS_AS(ValueGroup(1, 4, 1), StructuralError);
}

TEST_CASE("compare: zero is below everything, lex on coordinates") {
  ValueGroup z(1), z2(2), half(1, 2, 1);
  CHECK(compare(ValueWithZero::zero(z), V(z, {0})) == std::strong_ordering::less);
  CHECK(compare(V(z2, {1, 0}), V(z2, {0, 5})) == std::strong_ordering::greater);
  CHECK(compare(ValueWithZero::from_numerators(half, {1}), V(half, {1})) == std::strong_ordering::less);
  CHECK_THROWS_AS(compare(V(z, {1}), V(z2, {1, 0})), StructuralError);
}

TEST_CASE("group law") {
  ValueGroup z(1), z2(2);
  CHECK(mul(V(z, {1}), V(z, {2})) == V(z, {3}));
  CHECK(mul(ValueWithZero::zero(z), V(z, {7})).is_zero());
  CHECK(inv(V(z2, {1, -2})) == V(z2, {-1, 2}));
  CHECK_THROWS_AS(inv(ValueWithZero::zero(z)), DomainError);
  CHECK(div(V(z, {5}), V(z, {2})) == V(z, {3}));
  CHECK(V(z, {0}).is_one());
}

TEST_CASE("additive reading: zero element is infinity") {
  ValueGroup z(1);
  CHECK(additive_compare(ValueWithZero::zero(z), V(z, {100})) == std::strong_ordering::greater);
  CHECK(additive_min(ValueWithZero::zero(z), V(z, {3})) == V(z, {3}));
  CHECK(additive_min(V(z, {-1}), V(z, {3})) == V(z, {-1}));
  CHECK(negate(V(z, {4})) == V(z, {-4}));
}

TEST_CASE("embedding into a refinement preserves order and values") {
  ValueGroup z(1), q(1, 3, 2);
  auto a = V(z, {2});
  auto b = a.embed(q);
  CHECK(b.group() == q);
  CHECK(b.numerators() == std::vector<std::int64_t>{18});
  CHECK(b.to_string() == "(2)");
  CHECK(ValueWithZero::zero(z).embed(q).is_zero());
  CHECK_THROWS_AS(ValueWithZero::from_numerators(q, {1}).embed(z), StructuralError);
}

TEST_CASE("p-torsion quotients") {
  CHECK(is_p_torsion_quotient(ValueGroup(1), ValueGroup(1, 2, 1), 2));
  CHECK(is_p_torsion_quotient(ValueGroup(1), ValueGroup(1), 2));
  CHECK_FALSE(is_p_torsion_quotient(ValueGroup(1), ValueGroup(1, 3, 1), 2));
  CHECK(is_p_torsion_quotient(ValueGroup(2), ValueGroup(2, 3, 2), 3));
  CHECK_THROWS_AS(is_p_torsion_quotient(ValueGroup(1, 2, 1), ValueGroup(1), 2), StructuralError);
}

TEST_CASE("parse and print round trip") {
  ValueGroup g(2, 2, 1);
  for (const char* s : {"(1, -1/2)", "(0, 0)", "0"}) CHECK(ValueWithZero::parse(s, g).to_string() == s);
}

TEST_CASE("property: total order, transitivity, compatibility with the group law") {
  std::mt19937_64 rng(11);
  for (const auto& g : {ValueGroup(1), ValueGroup(2), ValueGroup(3, 2, 2)}) {
    for (int i = 0; i < 500; ++i) {
      auto a = random_value(g, rng), b = random_value(g, rng), c = random_value(g, rng);
      auto ab = compare(a, b), ba = compare(b, a);
      CHECK((ab == std::strong_ordering::equal) == (a == b));
      CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
      if (compare(a, b) != std::strong_ordering::greater && compare(b, c) != std::strong_ordering::greater)
        CHECK(compare(a, c) != std::strong_ordering::greater);
      if (compare(a, b) != std::strong_ordering::greater)
        CHECK(compare(mul(a, c), mul(b, c)) != std::strong_ordering::greater);
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      if (!a.is_zero()) CHECK(mul(a, inv(a)).is_one());
    }
  }
}

TEST_CASE("property: embedding is order preserving") {
  std::mt19937_64 rng(12);
  ValueGroup g(2), h(2, 5, 1);
  for (int i = 0; i < 300; ++i) {
    auto a = random_value(g, rng), b = random_value(g, rng);
    CHECK(compare(a, b) == compare(a.embed(h), b.embed(h)));
    CHECK(mul(a, b).embed(h) == mul(a.embed(h), b.embed(h)));
  }
}
