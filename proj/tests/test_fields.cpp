#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "valext/errors.hpp"
#include "valext/factor.hpp"
#include "valext/field_element.hpp"
#include "valext/field_map.hpp"
#include "valext/random.hpp"
#include "valext/tower.hpp"

using namespace valext;

namespace {

FieldElement el(const FieldPtr& F, const char* s) { return parse_element(F, s); }

}  // namespace

TEST_CASE("tower descriptions round trip") {
  for (const char* t : {"base=Q", "base=F5", "base=Q; gen i: algebraic y^2 + 1",
                        "base=F2; gen a: transcendental; gen r: algebraic y^2 + a",
                        "base=Q; gen s: algebraic y^2 - 2; gen x: transcendental; gen w: algebraic y^3 - s*x"}) {
    auto F = parse_tower(t);
    CHECK(print_tower(F) == t);
    CHECK(same_tower(*parse_tower(print_tower(F)), *F));
  }
  CHECK(parse_tower("base=Q; gen i: algebraic y^2 + 1")->short_name() == "Q(i)");
}

TEST_CASE("malformed or reducible towers are rejected") {
  CHECK_THROWS_AS(parse_tower("base=Q; gen i: algebraic y^2 - 1"), DomainError);
  CHECK_THROWS_AS(parse_tower("base=F4"), Error);
  CHECK_THROWS_AS(parse_tower("base=Q; gen i: algebraic"), Error);
  CHECK_THROWS_AS(parse_tower("base=Q; gen a: transcendental; gen b: transcendental; gen c: transcendental; "
                              "gen d: transcendental"),
                  Error);
}

TEST_CASE("arithmetic in small towers") {
  auto Qi = parse_tower("base=Q; gen i: algebraic y^2 + 1");
  CHECK(el(Qi, "i*i") == el(Qi, "-1"));
  CHECK(el(Qi, "1/(1+i)") == el(Qi, "1/2 - 1/2*i"));
  auto F = parse_tower("base=F3; gen a: transcendental");
  CHECK(el(F, "(a^2 - 1)/(a + 1)") == el(F, "a - 1"));
  CHECK(el(F, "3*a") == el(F, "0"));
  CHECK_THROWS_AS(el(F, "1/(a - a)"), ParseError);
  CHECK_THROWS_AS(el(F, "a") / el(F, "0"), DomainError);
  auto G = parse_tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a");
  CHECK(el(G, "r^2") == el(G, "a"));
  CHECK(el(G, "(r + 1)^2") == el(G, "a + 1"));
}

TEST_CASE("separability of steps") {
  auto F = parse_tower("base=F2; gen a: transcendental");
  CHECK_FALSE(is_separable_step(extend_tower(F, "gen r: algebraic y^2 - a")));
  CHECK(is_separable_step(parse_tower("base=F2; gen c: algebraic y^3 - y - 1")));
  CHECK(is_separable_step(parse_tower("base=Q; gen i: algebraic y^2 + 1")));
  CHECK(is_separable_step(F));
  auto G = parse_tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a; gen x: transcendental");
  CHECK_FALSE(is_separable_over(G, 1));
  CHECK(is_separable_over(G, 2));
}

TEST_CASE("degrees over prefixes") {
  auto G = parse_tower("base=Q; gen s: algebraic y^2 - 2; gen t: algebraic y^3 - s");
  CHECK(degree_over(G, 0) == 6);
  CHECK(degree_over(G, 1) == 3);
  CHECK_FALSE(degree_over(parse_tower("base=Q; gen x: transcendental"), 0).has_value());
  CHECK(is_algebraic_over(G, 0));
}

TEST_CASE("radicial extensions") {
  auto K = parse_tower("base=F2; gen a: transcendental");
  CHECK_FALSE(is_radicial(K, extend_tower(K, "gen x: transcendental"), 2));
  CHECK(is_radicial(K, extend_tower(K, "gen r: algebraic y^2 - a"), 2));
  CHECK(is_radicial(K, extend_tower(K, "gen r: algebraic y^4 - a"), 2));
  CHECK_FALSE(is_radicial(K, extend_tower(K, "gen c: algebraic y^2 + y + 1"), 2));
}

TEST_CASE("truncated perfect closure") {
  auto K = parse_tower("base=F2; gen a: transcendental");
  auto r = perfect_closure_truncated(K, 2, 1);
  CHECK(print_tower(r.field) == "base=F2; gen a^(1/2): transcendental");
  CHECK(r.embedding(FieldElement::generator(K, 1)) == FieldElement::generator(r.field, 1).pow(2));
  CHECK(r.embedding.well_defined());
  auto s = perfect_closure_truncated(parse_tower("base=F3; gen s: transcendental; gen t: transcendental"), 3, 1);
  CHECK(s.field->short_name() == "F3(s^(1/3))(t^(1/3))");
  CHECK(is_radicial(s.embedding, 3));
  auto f = perfect_closure_truncated(parse_tower("base=F5"), 5, 3);
  CHECK(f.field->short_name() == "F5");
  CHECK_THROWS_AS(perfect_closure_truncated(parse_tower("base=Q"), 2, 1), DomainError);
  CHECK(root_name("a", 4) == "a^(1/4)");
}

TEST_CASE("p-th roots") {
  auto K = parse_tower("base=F2; gen a: transcendental");
  auto r = pth_root(*K, el(K, "a^2 + 1").raw());
  REQUIRE(r);
  CHECK(FieldElement(K, *r) == el(K, "a + 1"));
  CHECK_FALSE(pth_root(*K, el(K, "a").raw()));
  auto F9 = parse_tower("base=F3; gen c: algebraic y^2 + 1");
  auto z = el(F9, "c + 2");
  CHECK(FieldElement(F9, *pth_root(*F9, z.pow(3).raw())) == z);
}

TEST_CASE("field maps") {
  auto Qi = parse_tower("base=Q; gen i: algebraic y^2 + 1");
  FieldMap conj(Qi, Qi, {el(Qi, "-i").raw()});
  CHECK(conj.well_defined());
  CHECK(conj(el(Qi, "2 + 3*i")) == el(Qi, "2 - 3*i"));
  CHECK(conj.then(conj).same_as(FieldMap::identity(Qi)));
  CHECK(is_isomorphism_pair(conj, conj));
  FieldMap bad(Qi, Qi, {el(Qi, "2").raw()});
  CHECK_FALSE(bad.well_defined());
  auto K = parse_tower("base=Q; gen x: transcendental");
  FieldMap sq(K, K, {el(K, "x^2").raw()});
  CHECK(sq(el(K, "(x + 1)/x")) == el(K, "(x^2 + 1)/x^2"));
  auto Kx = parse_tower("base=Q; gen i: algebraic y^2 + 1; gen x: transcendental");
  CHECK(FieldMap::by_names(K, Kx)(el(K, "x + 1")) == el(Kx, "x + 1"));
}

TEST_CASE("constant splitting of towers") {
  auto F = parse_tower("base=Q; gen x: transcendental; gen i: algebraic y^2 + 1");
  auto s = split_constants(F);
  REQUIRE(s);
  CHECK(s->constants->short_name() == "Q(i)");
  CHECK(is_isomorphism_pair(s->to_reordered, s->from_reordered));
  CHECK_FALSE(split_constants(parse_tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a")));
}

TEST_CASE("property: field axioms in several towers") {
  std::mt19937_64 rng(21);
  for (const char* t : {"base=Q; gen i: algebraic y^2 + 1", "base=F5; gen a: transcendental",
                        "base=F2; gen a: transcendental; gen r: algebraic y^2 + a",
                        "base=F5; gen c: algebraic y^2 - 2", "base=Q; gen x: transcendental; gen w: algebraic y^2 - x",
                        "base=F3; gen a: transcendental; gen r: algebraic y^2 - a"}) {
    auto F = parse_tower(t);
    for (int i = 0; i < 80; ++i) {
      auto x = random_element(F, rng), y = random_element(F, rng), z = random_element(F, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK(x + y == y + x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x - x).is_zero());
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      CHECK(parse_element(F, x.to_string()) == x);
    }
  }
}

TEST_CASE("property: Frobenius is additive in characteristic p") {
  std::mt19937_64 rng(22);
  auto F = parse_tower("base=F3; gen a: transcendental; gen c: algebraic y^2 + 1");
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(F, rng), y = random_element(F, rng);
    CHECK((x + y).pow(3) == x.pow(3) + y.pow(3));
  }
}
