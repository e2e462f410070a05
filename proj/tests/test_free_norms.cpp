#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "valext/errors.hpp"
#include "valext/free_norms.hpp"
#include "valext/random.hpp"

using namespace valext;

namespace {

FieldElement el(const MonomialValuation& V, const char* s) { return parse_element(V.function_field(), s); }

FreeModule::Vec random_vec(const MonomialValuation& V, std::size_t r, std::mt19937_64& rng) {
  FreeModule::Vec z;
  for (std::size_t i = 0; i < r; ++i) z.push_back(random_fraction(V, rng));
  return z;
}

// Random element of A: sum of scalars times basis elements (or powers of y).
Polynomial random_algebra_element(const FreeAlgebra& A, std::mt19937_64& rng, bool integral) {
  const auto& V = A.valuation();
  Polynomial z = A.zero();
  Polynomial power = A.one();
  std::size_t terms = A.is_polynomial() ? 3 : A.finite_rank();
  for (std::size_t k = 0; k < terms; ++k) {
    auto c = integral ? random_integral(V, rng, 1) : random_fraction(V, rng, 1);
    Polynomial basis = A.is_polynomial() ? power : A.generator(k);
    z = z + A.mul(A.scalar(c), basis);
    if (A.is_polynomial()) power = A.mul(power, A.generator(0));
  }
  return z;
}

bool ge(const ValueWithZero& a, const ValueWithZero& b) { return additive_compare(a, b) != std::strong_ordering::less; }

}  // namespace

TEST_CASE("norm on a free module") {
  auto V = parse_valuation("field: base=F3; vars: x; order: lex");
  FreeModule E(V, 2);
  CHECK(E.norm(E.zero()).is_zero());
  CHECK(E.norm({el(V, "x^2"), el(V, "x^-1")}).to_string() == "(-1)");
  CHECK(E.norm({el(V, "1"), el(V, "x")}).to_string() == "(0)");
  CHECK(E.contains({el(V, "1"), el(V, "x")}));
  CHECK_FALSE(E.in_maximal_submodule({el(V, "1"), el(V, "x")}));
  CHECK(E.in_maximal_submodule({el(V, "x"), el(V, "x^2/(1 + x)")}));
  CHECK_THROWS_AS(E.norm({el(V, "1")}), StructuralError);
}

TEST_CASE("unit-part factorization") {
  auto V = parse_valuation("field: base=F3; vars: x; order: lex");
  FreeModule E(V, 2);
  auto [a, u] = E.unit_part_factor({el(V, "x^2"), el(V, "x^3")});
  CHECK(a == el(V, "x^2"));
  CHECK(u[0] == el(V, "1"));
  CHECK(u[1] == el(V, "x"));
  auto [b, w] = E.unit_part_factor({el(V, "1"), el(V, "0")});
  CHECK(b.is_one());
  CHECK(w[0].is_one());
  auto [c, t] = E.unit_part_factor({el(V, "x^-1"), el(V, "1")});
  CHECK(c == el(V, "1/x"));
  CHECK(t[1] == el(V, "x"));
  CHECK_THROWS_AS(E.unit_part_factor(E.zero()), DomainError);
}

TEST_CASE("property: module norm axioms") {
  std::mt19937_64 rng(51);
  for (const char* d : {"field: base=F5; vars: x; order: lex", "field: base=Q; vars: x1,x2; order: lex"}) {
    auto V = parse_valuation(d);
    FreeModule E(V, 3);
    for (int i = 0; i < 200; ++i) {
      auto z = random_vec(V, 3, rng), w = random_vec(V, 3, rng);
      auto a = random_fraction(V, rng);
      FreeModule::Vec sum, scaled;
      bool zero = true;
      for (std::size_t k = 0; k < 3; ++k) {
        sum.push_back(z[k] + w[k]);
        scaled.push_back(a * z[k]);
        zero = zero && z[k].is_zero();
      }
      CHECK(E.norm(z).is_zero() == zero);
      CHECK(ge(E.norm(sum), additive_min(E.norm(z), E.norm(w))));
      CHECK(E.norm(scaled) == mul(V.value(a), E.norm(z)));
      CHECK(E.contains(z) == ge(E.norm(z), ValueWithZero::one(V.group())));
      CHECK(E.in_maximal_submodule(z) ==
            (additive_compare(E.norm(z), ValueWithZero::one(V.group())) == std::strong_ordering::greater));
      if (!zero) {
        auto [alpha, u] = E.unit_part_factor(z);
        CHECK(E.norm(u).is_one());
        CHECK(V.value(alpha) == E.norm(z));
        for (std::size_t k = 0; k < 3; ++k) CHECK(alpha * u[k] == z[k]);
      }
    }
  }
}

TEST_CASE("property: norm is unchanged by unimodular changes of basis") {
  std::mt19937_64 rng(52);
  auto V = parse_valuation("field: base=Q; vars: x1,x2; order: lex");
  FreeModule E(V, 3);
  std::uniform_int_distribution<int> pick(0, 2);
  for (int i = 0; i < 100; ++i) {
    auto z = random_vec(V, 3, rng);
    auto before = E.norm(z);
    for (int step = 0; step < 4; ++step) {
      int r = pick(rng), s = pick(rng);
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:
          if (r != s) z[r] = z[r] + random_integral(V, rng) * z[s];
          break;
        case 1:
          z[r] = random_unit(V, rng) * z[r];
          break;
        default:
          std::swap(z[r], z[s]);
      }
    }
    CHECK(E.norm(z) == before);
  }
}

TEST_CASE("algebra norms") {
  auto V = parse_valuation("field: base=F2; vars: x; order: lex");
  auto A = FreeAlgebra::polynomial(V, {"y"});
  Polynomial y = A.generator(0), w = A.generator(0) + A.scalar(el(V, "x"));
  CHECK(ge(A.norm(A.mul(y, w)), mul(A.norm(y), A.norm(w))));
  CHECK(A.norm(A.scalar(el(V, "x^3"))).to_string() == "(3)");
  CHECK(A.norm(A.scalar(el(V, "1 + x"))).is_one());
  std::mt19937_64 rng(53);
  auto report = check_algebra_norm(A, rng, 60);
  CHECK(report.ok());
  CHECK(report.products_checked > 0);
  auto Q = parse_valuation("field: base=Q; vars: x1,x2; order: lex");
  auto B = FreeAlgebra::quotient(Q, UPoly::parse(Q.function_field(), "y^3 - x1*y - 1"));
  auto rb = check_algebra_norm(B, rng, 60);
  CHECK(rb.ok());
  CHECK(rb.units_checked > 0);
}

TEST_CASE("reducedness lifts") {
  auto V = parse_valuation("field: base=Q; vars: x; order: lex");
  auto r = is_reduced_lift(FreeAlgebra::quotient(V, UPoly::parse(V.function_field(), "y^2 + 1")));
  CHECK(r.residue_reduced);
  CHECK(r.certified_reduced);
  auto W = parse_valuation("field: base=F2; gen a: transcendental; gen r: algebraic y^2 - a; vars: x; order: lex");
  auto n = is_reduced_lift(FreeAlgebra::quotient(W, UPoly::parse(W.function_field(), "w^2 - a", "w")));
  CHECK_FALSE(n.residue_reduced);
  REQUIRE(n.nilpotent);
  CHECK(n.nilpotent->to_string() == "w + r");
  CHECK(n.nilpotency_index == 2);
  CHECK(is_reduced_lift(FreeAlgebra::structure_constants(V, {{{el(V, "1")}}})).certified_reduced);
  CHECK(is_reduced_lift(FreeAlgebra::polynomial(V, {"y"})).certified_reduced);
}

TEST_CASE("structure-constant algebras") {
  auto V = parse_valuation("field: base=Q; vars: x; order: lex");
  auto one = el(V, "1"), zero = el(V, "0");
  // V x V with e1 idempotent: reduced.
  FreeAlgebra::Table split{{{one, zero}, {zero, one}}, {{zero, one}, {zero, one}}};
  auto S = FreeAlgebra::structure_constants(V, split);
  CHECK(is_reduced_lift(S).certified_reduced);
  // Dual numbers: e1^2 = 0.
  FreeAlgebra::Table dual{{{one, zero}, {zero, one}}, {{zero, one}, {zero, zero}}};
  auto D = FreeAlgebra::structure_constants(V, dual);
  auto rd = is_reduced_lift(D);
  CHECK_FALSE(rd.residue_reduced);
  REQUIRE(rd.nilpotent);
  CHECK(D.residue_mul(*rd.nilpotent, *rd.nilpotent).is_zero());
  FreeAlgebra::Table bad{{{zero, one}, {one, zero}}, {{one, zero}, {zero, one}}};
  CHECK_THROWS_AS(FreeAlgebra::structure_constants(V, bad), StructuralError);
  FreeAlgebra::Table nonintegral{{{one, zero}, {zero, one}}, {{zero, one}, {el(V, "1/x"), zero}}};
  CHECK_THROWS_AS(FreeAlgebra::structure_constants(V, nonintegral), StructuralError);
}

TEST_CASE("property: a nilpotent of A forces a non-reduced residue algebra") {
  std::mt19937_64 rng(54);
  auto V = parse_valuation("field: base=Q; vars: x; order: lex");
  for (int i = 0; i < 20; ++i) {
    // f = (y - c)^2 * g with integral c gives the nilpotent (y - c) g.
    auto c = random_integral(V, rng);
    auto K = V.function_field();
    UPoly lin = UPoly::parse(K, "y") - UPoly::constant(c);
    UPoly f = lin * lin * (UPoly::parse(K, "y") - UPoly::constant(random_integral(V, rng)));
    auto A = FreeAlgebra::quotient(V, f);
    auto r = is_reduced_lift(A);
    CHECK_FALSE(r.residue_reduced);
    CHECK_FALSE(r.certified_reduced);
  }
}

TEST_CASE("Gauss extension of the x-adic valuation") {
  auto V = parse_valuation("field: base=F2; vars: x; order: lex");
  auto G = gauss_extend(FreeAlgebra::polynomial(V, {"y"}));
  auto E = G.fraction_field();
  CHECK(G.value(parse_element(E, "x*y^2 + y + x^3")).to_string() == "(0)");
  CHECK(G.value(parse_element(E, "(y + x)*(y + x^2)")).to_string() == "(0)");
  CHECK(G.value(parse_element(E, "x/(y + x)")).to_string() == "(1)");
  CHECK(G.group() == V.group());
  CHECK(G.residue_field()->short_name() == "F2(ybar)");
  CHECK(G.residue(parse_element(E, "(y + x)/(y^2 + 1)")).to_string() == "(ybar)/(ybar^2 + 1)");
  CHECK_FALSE(G.in_ring(parse_element(E, "y/x")));
}

TEST_CASE("Gauss extension of a quotient with irreducible reduction") {
  auto V = parse_valuation("field: base=Q; vars: x; order: lex");
  auto G = gauss_extend(FreeAlgebra::quotient(V, UPoly::parse(V.function_field(), "y^2 + 1 + x")));
  CHECK(G.residue_field()->short_name() == "Q(ybar)");
  auto E = G.fraction_field();
  CHECK(G.value(parse_element(E, "y^2 + 1")).to_string() == "(1)");
  CHECK_THROWS_AS(gauss_extend(FreeAlgebra::quotient(V, UPoly::parse(V.function_field(), "y^2 - 1 + x"))),
                  PreconditionError);
}

TEST_CASE("property: Gauss valuations are multiplicative with the same group") {
  std::mt19937_64 rng(55);
  auto V = parse_valuation("field: base=F5; vars: x; order: lex");
  auto Q2 = parse_valuation("field: base=Q; vars: x1,x2; order: lex");
  std::vector<FreeAlgebra> algebras{FreeAlgebra::polynomial(V, {"y"}), FreeAlgebra::polynomial(Q2, {"y"}),
                                    FreeAlgebra::quotient(Q2, UPoly::parse(Q2.function_field(), "y^2 + 1 + x2"))};
  for (const auto& A : algebras) {
    auto G = gauss_extend(A);
    CHECK(G.group() == A.valuation().group());
    for (int i = 0; i < 60; ++i) {
      auto z = random_algebra_element(A, rng, false), u = random_algebra_element(A, rng, false);
      auto ez = G.embed(z), eu = G.embed(u);
      CHECK(G.value(ez * eu) == mul(G.value(ez), G.value(eu)));
      CHECK(G.value(ez) == A.norm(z));
      if (!eu.is_zero()) CHECK(G.value(ez / eu) == div(G.value(ez), G.value(eu)));
    }
  }
}
