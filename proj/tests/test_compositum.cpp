#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "valext/compositum.hpp"
#include "valext/errors.hpp"
#include "valext/random.hpp"
#include "valext/tower.hpp"

using namespace valext;

namespace {

FieldPtr T(const char* s) { return parse_tower(s); }

// [E:M] for a decomposition point, from the chosen factor degrees.
long degree_E_over_M(const CompositumPoint& pt) {
  long d = 1;
  for (const auto& s : pt.steps)
    if (s.factor) d *= s.factor->degree();
  return d;
}

}  // namespace

TEST_CASE("Q(i) over Q with itself") {
  auto pts = tensor_decompose(T("base=Q"), T("base=Q; gen i: algebraic y^2 + 1"), T("base=Q; gen i: algebraic y^2 + 1"));
  REQUIRE(pts.size() == 2);
  for (const auto& p : pts) {
    CHECK(p.strictly_maximal);
    CHECK(p.maximal);
    CHECK(p.multiplicity == 1);
    CHECK(p.E->short_name() == "Q(i)");
    CHECK(p.u.well_defined());
    CHECK(p.v.well_defined());
  }
  // The two points send i to the two roots.
  CHECK_FALSE(pts[0].u.image(1) == pts[1].u.image(1));
}

TEST_CASE("radicial extension gives one non-reduced point") {
  auto K = T("base=F2; gen a: transcendental");
  auto L = extend_tower(K, "gen r: algebraic y^2 - a");
  auto pts = tensor_decompose(K, L, L);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].maximal);
  CHECK_FALSE(pts[0].strictly_maximal);
  CHECK(pts[0].multiplicity == 2);
  CHECK(pts[0].E->short_name() == "F2(a)(r)");
}

TEST_CASE("transcendental step gives one strictly maximal point") {
  auto K = T("base=Q");
  auto pts = tensor_decompose(K, T("base=Q; gen x: transcendental"), T("base=Q; gen i: algebraic y^2 + 1"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].strictly_maximal);
  CHECK(pts[0].E->short_name() == "Q(i)(x)");
  CHECK(pts[0].steps.at(0).transcendental);
}

TEST_CASE("clashing generator names are made unique") {
  auto K = T("base=Q");
  auto pts = tensor_decompose(K, T("base=Q; gen s: algebraic y^2 - 3"), T("base=Q; gen s: algebraic y^2 - 2"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].steps[0].name_in_E == "s'");
  CHECK(degree_E_over_M(pts[0]) == 2);
}

TEST_CASE("degree bound surfaces as a capability error") {
  auto L = T("base=Q; gen c: algebraic y^13 - 2");
  CHECK_THROWS_AS(tensor_decompose(T("base=Q"), L, L), CapabilityError);
}

TEST_CASE("separable transfer") {
  auto pts = tensor_decompose(T("base=Q"), T("base=Q; gen s: algebraic y^2 - 2"), T("base=Q; gen x: transcendental"));
  auto r = separable_transfer_check(pts.at(0));
  CHECK(r.L_separable);
  CHECK(r.E_over_M_separable);
  CHECK(r.degree_E_over_M == 2);
  CHECK(r.consistent);
}

TEST_CASE("composed extension that is separable over K but not over M") {
  auto K = T("base=F2; gen a: transcendental");
  auto L = extend_tower(K, "gen x: transcendental");
  auto M = extend_tower(K, "gen m: transcendental");
  auto E = extend_tower(K, "gen r: algebraic y^2 - a; gen x: transcendental");
  FieldMap u = FieldMap::by_names(L, E);
  FieldMap v(M, E, {E->generator(1), parse_element(E, "x + r").raw()});
  REQUIRE(v.well_defined());
  auto pt = make_point(K, L, M, E, u, v);
  auto P = extend_tower(M, "gen r: algebraic y^2 - a");
  FieldMap to(P, E, {E->generator(1), parse_element(E, "x + r").raw(), E->generator(2)});
  FieldMap from(E, P, {P->generator(1), P->generator(3), parse_element(P, "m + r").raw()});
  REQUIRE(is_isomorphism_pair(to, from));
  auto r = separable_transfer_check(pt, RelativePresentation{P, to, from});
  CHECK(r.L_separable);
  CHECK_FALSE(r.E_over_M_separable);
  CHECK(r.degree_E_over_M == 2);
  CHECK_FALSE(r.flags.maximal);
  CHECK(r.consistent);
}

TEST_CASE("hand-made points are matched against the decomposition") {
  auto K = T("base=Q");
  auto L = T("base=Q; gen i: algebraic y^2 + 1");
  auto pts = tensor_decompose(K, L, L);
  FieldMap conj(L, L, {parse_element(L, "-i").raw()});
  auto idx = match_point(pts, L, conj, FieldMap::identity(L));
  REQUIRE(idx);
  CHECK(pts[*idx].u.same_as(conj));
  auto flags = classify_point(make_point(K, L, L, L, conj, FieldMap::identity(L)));
  CHECK(flags.strictly_maximal);
  CHECK(flags.multiplicity == 1);
  // Q(i)(t) with both factors mapped in is not maximal: transcendence degrees do not add up.
  auto E = extend_tower(L, "gen t: transcendental");
  auto Lx = T("base=Q; gen i: algebraic y^2 + 1");
  auto f2 = classify_point(make_point(K, Lx, L, E, FieldMap::by_names(Lx, E), FieldMap::by_names(L, E)));
  CHECK_FALSE(f2.maximal);
}

TEST_CASE("restriction to a subextension and change of base") {
  auto K = T("base=Q");
  auto L = T("base=Q; gen s: algebraic y^2 - 2; gen x: transcendental");
  auto M = T("base=Q; gen s: algebraic y^2 - 2");
  auto pts = tensor_decompose(K, L, M);
  for (const auto& p : pts) {
    auto r = subfield_maximality_check(p, 1);
    CHECK(r.point_maximal);
    CHECK(r.restricted_maximal);
    CHECK(r.consistent);
  }
  auto Ki = T("base=Q; gen i: algebraic y^2 + 1");
  auto bc = tensor_decompose(Ki, extend_tower(Ki, "gen x: transcendental"), extend_tower(Ki, "gen z: transcendental"));
  auto b = base_change_maximality_check(bc.at(0), 0);
  CHECK(b.K_algebraic_over_K0);
  CHECK(b.maximal_over_K);
  CHECK(b.maximal_over_K0);
  CHECK(b.consistent);
  auto Kc = T("base=F2; gen a: transcendental; gen r: algebraic y^2 - a");
  auto bc2 = tensor_decompose(Kc, extend_tower(Kc, "gen x: transcendental"), extend_tower(Kc, "gen z: transcendental"));
  auto b2 = base_change_maximality_check(bc2.at(0), 1);
  CHECK(b2.maximal_over_K0);
  CHECK(b2.consistent);
}

TEST_CASE("decomposition with an embedding of K into M") {
  auto K = T("base=F2; gen a: transcendental");
  auto Kd = perfect_closure_truncated(K, 2, 1);
  auto pts = tensor_decompose(Kd.embedding, extend_tower(K, "gen s: algebraic y^2 - a"));
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].multiplicity == 2);
  CHECK_FALSE(pts[0].strictly_maximal);
  CHECK(pts[0].K_to_M.has_value());
}

TEST_CASE("property: degree bookkeeping over F5 and number fields") {
  std::mt19937_64 rng(61);
  struct Case {
    const char* K;
    const char* L_step;
    const char* M;
    long degree;
  };
  std::vector<Case> cases{
      {"base=F5", "gen c: algebraic y^4 + 2", "base=F5; gen d: algebraic y^2 - 2", 4},
      {"base=F5", "gen c: algebraic y^3 + y + 1", "base=F5; gen d: algebraic y^3 + y + 1", 3},
      {"base=Q", "gen c: algebraic y^4 - 2", "base=Q; gen s: algebraic y^2 - 2", 4},
      {"base=Q", "gen c: algebraic y^4 + 1", "base=Q; gen i: algebraic y^2 + 1", 4},
      {"base=Q", "gen c: algebraic y^3 - 2", "base=Q; gen i: algebraic y^2 + 1", 3},
  };
  for (const auto& c : cases) {
    auto K = T(c.K);
    auto L = extend_tower(K, c.L_step);
    auto pts = tensor_decompose(K, L, T(c.M));
    long total = 0;
    for (const auto& p : pts) total += p.multiplicity * degree_E_over_M(p);
    CHECK_MESSAGE(total == c.degree, c.L_step, " over ", c.M);
    // One point per irreducible factor of the minimal polynomial over M.
    auto f = factor(UPoly(T(c.M), FieldMap::by_names(K, T(c.M)).apply(L->minpoly())));
    CHECK(pts.size() == f.factors.size());
    for (const auto& p : pts) {
      CHECK(p.u.well_defined());
      // Random elements of L map compatibly: u is a ring map.
      auto a = random_element(L, rng), b = random_element(L, rng);
      CHECK(p.u(a * b) == p.u(a) * p.u(b));
      CHECK(p.u(a + b) == p.u(a) + p.u(b));
    }
  }
}
