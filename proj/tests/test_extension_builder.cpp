#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "valext/errors.hpp"
#include "valext/extension_builder.hpp"
#include "valext/random.hpp"
#include "valext/tower.hpp"

using namespace valext;

namespace {

ExtensionScenario scenario(const char* k, const char* V, const char* kprime) {
  return ExtensionScenario{parse_tower(k), parse_valuation(V), parse_tower(kprime)};
}

ExtensionScenario qi() { return scenario("base=Q", "field: base=Q; vars: x; order: lex", "base=Q; gen i: algebraic y^2 + 1"); }

ExtensionScenario char2() {
  return scenario("base=F2; gen a: transcendental",
                  "field: base=F2; gen a: transcendental; gen r: algebraic y^2 - a; vars: x; order: lex",
                  "base=F2; gen a: transcendental; gen s: algebraic y^2 - a");
}

}  // namespace

TEST_CASE("k' = Q(i) over the x-adic valuation of Q(x)") {
  auto s = qi();
  auto b = build_strictly_maximal(s);
  CHECK(b.delta() == ValueGroup(1));
  CHECK(b.residue_field()->short_name() == "Q(i)");
  CHECK(b.kprime_to_F1.well_defined());
  CHECK(b.point_count == 1);
  CHECK_FALSE(b.general);
  std::mt19937_64 rng(71);
  auto w = verify_weakly_unramified(b, s.V, rng);
  CHECK(w.weakly_unramified());
  CHECK(w.witnesses.empty());
  auto sp = spec_correspondence(b, s, rng);
  CHECK(sp.ok);
  CHECK(sp.primes_V == 2);
  CHECK(sp.primes_W == 2);
  for (const auto& p : sp.pairs) {
    CHECK(p.contraction_ok);
    CHECK(p.strictly_maximal);
    REQUIRE(p.separable_over_kappa);
    CHECK(*p.separable_over_kappa);
  }
}

TEST_CASE("rank 2 with k' = Q(sqrt 2)") {
  auto s = scenario("base=Q", "field: base=Q; vars: x1,x2; order: lex", "base=Q; gen s: algebraic y^2 - 2");
  auto b = build_strictly_maximal(s);
  CHECK(b.delta().to_string() == "Z^2 lex");
  std::mt19937_64 rng(72);
  auto sp = spec_correspondence(b, s, rng);
  CHECK(sp.ok);
  CHECK(sp.primes_V == 3);
  CHECK(sp.primes_W == 3);
  for (const auto& p : sp.pairs) CHECK(p.separable_over_kappa.value_or(false));
  CHECK(verify_weakly_unramified(b, s.V, rng).weakly_unramified());
}

TEST_CASE("purely transcendental k'") {
  auto s = scenario("base=Q", "field: base=Q; vars: x1,x2; order: lex", "base=Q; gen t: transcendental");
  auto b = build_strictly_maximal(s);
  CHECK(b.residue_field()->short_name() == "Q(t)");
  std::mt19937_64 rng(73);
  CHECK(verify_weakly_unramified(b, s.V, rng).weakly_unramified());
  CHECK(spec_correspondence(b, s, rng).ok);
}

TEST_CASE("k' over a residue field with a Hensel-split minimal polynomial") {
  // F = Q(i) already contains a root of y^2 + 1, so k' (x)_k F has two points.
  auto s = scenario("base=Q", "field: base=Q; gen i: algebraic y^2 + 1; vars: x; order: lex",
                    "base=Q; gen j: algebraic y^2 + 1");
  auto b0 = build_strictly_maximal(s);
  CHECK(b0.point_count == 2);
  s.point_index = 1;
  auto b1 = build_strictly_maximal(s);
  CHECK_FALSE(b0.kprime_to_F1.same_as(b1.kprime_to_F1));
  std::mt19937_64 rng(74);
  CHECK(verify_weakly_unramified(b1, s.V, rng).weakly_unramified());
  s.point_index = 2;
  CHECK_THROWS_AS(build_strictly_maximal(s), Error);
}

TEST_CASE("identity extension") {
  auto s = scenario("base=Q", "field: base=Q; vars: x; order: lex", "base=Q");
  auto b = build_strictly_maximal(s);
  CHECK(b.residue_field()->short_name() == "Q");
  CHECK(b.delta() == ValueGroup(1));
}

TEST_CASE("non-reduced tensor product needs the general construction") {
  CHECK_THROWS_AS(build_strictly_maximal(char2()), PreconditionError);
  auto s = char2();
  auto b = build_general(s, 1);
  CHECK(b.general);
  CHECK(b.delta().to_string() == "(1/2)Z lex");
  CHECK(b.p_torsion);
  CHECK(b.radicial);
  CHECK(is_p_torsion_quotient(b.gamma, b.delta(), 2));
  std::mt19937_64 rng(75);
  auto w = verify_weakly_unramified(b, s.V, rng);
  CHECK_FALSE(w.weakly_unramified());
  CHECK(w.weakly_unramified_over_reference());
  CHECK_FALSE(w.witnesses.empty());
  auto sp = spec_correspondence(b, s, rng);
  CHECK(sp.ok);
  CHECK(sp.primes_V == sp.primes_W);
}

TEST_CASE("general construction in characteristic 0 is the strict one") {
  auto b = build_general(qi(), 3);
  CHECK_FALSE(b.general);
  CHECK(b.residue_field()->short_name() == "Q(i)");
}

TEST_CASE("reports are deterministic and sectioned") {
  auto r1 = build_strictly_maximal(qi()).report();
  auto r2 = build_strictly_maximal(qi()).report();
  CHECK(r1 == r2);
  for (const char* sec : {"GROUP", "RESIDUE", "SPEC", "FLAGS", "PROVENANCE"}) CHECK(r1.find(sec) != std::string::npos);
  auto g1 = build_general(char2(), 1).report();
  CHECK(g1 == build_general(char2(), 1).report());
}

TEST_CASE("property: W dominates V and values agree on K") {
  auto s = scenario("base=Q", "field: base=Q; vars: x1,x2; order: lex", "base=Q; gen c: algebraic y^3 - 2");
  auto b = build_strictly_maximal(s);
  std::mt19937_64 rng(76);
  for (int i = 0; i < 80; ++i) {
    auto z = random_fraction(s.V, rng);
    auto wz = b.K_to_W(z);
    CHECK(b.W.value(wz) == s.V.value(z));
    if (s.V.in_ring(z)) CHECK(b.W.residue(wz) == b.F_to_F1(s.V.residue(z)));
  }
}
