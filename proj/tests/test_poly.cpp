#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "valext/errors.hpp"
#include "valext/factor.hpp"
#include "valext/random.hpp"
#include "valext/tower.hpp"
#include "valext/upoly.hpp"

using namespace valext;

namespace {

UPoly P(const FieldPtr& F, const char* s) { return UPoly::parse(F, s); }

std::string factors(const Factorization& f) {
  std::string out;
  for (const auto& fc : f.factors) {
    out += "(" + fc.poly.to_string() + ")";
    if (fc.multiplicity > 1) out += "^" + std::to_string(fc.multiplicity);
  }
  return out;
}

oracle::Poly to_oracle(const UPoly& f) {
  oracle::Poly out;
  for (const auto& c : f.coeffs()) out.push_back(static_cast<std::int64_t>(Field::as_fp(c)));
  return out;
}

UPoly random_monic(const FieldPtr& F, std::mt19937_64& rng, int max_degree) {
  int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
  Coeffs c;
  for (int k = 0; k < d; ++k) c.push_back(random_element(F, rng).raw());
  c.push_back(F->one());
  return UPoly(F, c);
}

UPoly product(const Factorization& f) {
  UPoly out = UPoly::constant(f.unit);
  for (const auto& fc : f.factors) out = out * fc.poly.pow(static_cast<unsigned>(fc.multiplicity));
  return out;
}

}  // namespace

TEST_CASE("gcd") {
  auto F3 = parse_tower("base=F3");
  CHECK(gcd(P(F3, "y^3 + y"), P(F3, "y^2 + 1")).to_string() == "y^2 + 1");
  auto Q = parse_tower("base=Q");
  CHECK(gcd(P(Q, "y^2 - 1"), P(Q, "y^2 + 2*y + 1")).to_string() == "y + 1");
  CHECK(gcd(P(Q, "y^2 + 1"), P(Q, "y")).to_string() == "1");
  auto Kx = parse_tower("base=Q; gen x: transcendental");
  CHECK(gcd(P(Kx, "(y - x)*(y + 1/x)"), P(Kx, "(y - x)*(y - 2)")) == P(Kx, "y - x"));
}

TEST_CASE("square-free decomposition") {
  auto F = perfect_closure_truncated(parse_tower("base=F2; gen a: transcendental"), 2, 1).field;
  auto sq = squarefree_part(P(F, "y^2 - (a^(1/2))^2"));
  CHECK(sq.part.to_string() == "y + a^(1/2)");
  CHECK(sq.pieces.at(0).multiplicity == 2);
  auto K = parse_tower("base=F2; gen a: transcendental");
  auto s2 = squarefree_part(P(K, "y^2 + a"));  // inseparable but square-free over F2(a)
  CHECK(s2.pieces.size() == 1);
  CHECK(s2.pieces[0].multiplicity == 1);
  auto Q = parse_tower("base=Q");
  auto s3 = squarefree_part(P(Q, "(y - 1)^3*(y + 2)"));
  CHECK(s3.part == P(Q, "(y - 1)*(y + 2)"));
}

TEST_CASE("factorizations over the supported fields") {
  CHECK(factors(factor(P(parse_tower("base=Q; gen i: algebraic y^2 + 1"), "y^2 + 1"))) == "(y - i)(y + i)");
  CHECK(factors(factor(P(parse_tower("base=F2"), "y^4 + 1"))) == "(y + 1)^4");
  CHECK(factors(factor(P(parse_tower("base=Q"), "y^4 + 4"))) == "(y^2 - 2*y + 2)(y^2 + 2*y + 2)");
  CHECK(factor(P(parse_tower("base=Q; gen s: algebraic y^2 - 2"), "y^4 - 4")).factors.size() == 3);
  auto F3a = parse_tower("base=F3; gen a: transcendental");
  CHECK(factor(P(F3a, "y^2 - a")).factors.size() == 1);
  CHECK(factors(factor(P(F3a, "y^2 - a^2"))) == "(y + a)(y - a)");
  CHECK(factor(P(parse_tower("base=Q; gen x: transcendental"), "y^3 - x")).factors.size() == 1);
  auto f = P(parse_tower("base=Q; gen x: transcendental; gen i: algebraic y^2 + 1"), "y^2 + 1");
  CHECK(factor(f).factors.size() == 2);
}

TEST_CASE("degree bound is a capability error") {
  auto Q = parse_tower("base=Q");
  CHECK_THROWS_AS(factor(P(Q, "y^13 - 2")), CapabilityError);
  FactorOptions o;
  o.max_degree = 13;
  CHECK(factor(P(Q, "y^13 - 2"), o).factors.size() == 1);
}

TEST_CASE("irreducibility") {
  auto F2 = parse_tower("base=F2");
  CHECK(is_irreducible(F2, P(F2, "y^3 + y + 1").coeffs()));
  CHECK_FALSE(is_irreducible(F2, P(F2, "y^2 + 1").coeffs()));
}

TEST_CASE("property: factorization over F5 agrees with trial division") {
  std::mt19937_64 rng(31);
  auto F5 = parse_tower("base=F5");
  for (int i = 0; i < 200; ++i) {
    UPoly f = random_monic(F5, rng, 6);
    auto fa = factor(f);
    std::vector<std::pair<oracle::Poly, int>> got;
    for (const auto& fc : fa.factors) got.push_back({to_oracle(fc.poly), fc.multiplicity});
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == oracle::factor_by_trial_division(to_oracle(f), 5), f.to_string());
    CHECK(product(fa) == f);
  }
}

TEST_CASE("property: roots over F25 agree with exhaustive evaluation") {
  std::mt19937_64 rng(32);
  auto F25 = parse_tower("base=F5; gen c: algebraic y^2 - 2");
  auto to_pair = [&](const Elt& e) {
    const Coeffs& c = Field::as_poly(e);
    auto at = [&](std::size_t k) { return k < c.size() ? static_cast<std::int64_t>(Field::as_fp(c[k])) : 0; };
    return oracle::F25{at(0), at(1)};
  };
  for (int i = 0; i < 120; ++i) {
    UPoly f = random_monic(F25, rng, 4);
    std::map<oracle::F25, int> got;
    for (const auto& fc : factor(f).factors)
      if (fc.poly.degree() == 1) got[to_pair(F25->neg(fc.poly.coeffs()[0]))] += fc.multiplicity;
    std::vector<oracle::F25> c;
    for (const auto& e : f.coeffs()) c.push_back(to_pair(e));
    CHECK_MESSAGE(got == oracle::roots_f25(c), f.to_string());
  }
}

TEST_CASE("property: division with remainder and gcd divide both inputs") {
  std::mt19937_64 rng(33);
  for (const char* t : {"base=Q", "base=F7", "base=Q; gen i: algebraic y^2 + 1", "base=F3; gen a: transcendental"}) {
    auto F = parse_tower(t);
    for (int i = 0; i < 40; ++i) {
      UPoly a = random_monic(F, rng, 5), b = random_monic(F, rng, 3);
      auto [q, r] = a.divrem(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
      UPoly g = gcd(a * b, b * b);
      CHECK(g.is_monic());
      CHECK(g == b * gcd(a, b));
      CHECK((a * b).divrem(g).second.is_zero());
    }
  }
}

TEST_CASE("property: products of random factors are recovered over number and function fields") {
  std::mt19937_64 rng(34);
  for (const char* t : {"base=Q", "base=Q; gen i: algebraic y^2 + 1", "base=F2; gen a: transcendental",
                        "base=Q; gen x: transcendental"}) {
    auto F = parse_tower(t);
    for (int i = 0; i < 15; ++i) {
      UPoly a = random_monic(F, rng, 1), b = random_monic(F, rng, 1), c = random_monic(F, rng, 1);
      UPoly f = a * b * c;
      auto fa = factor(f);
      CHECK(product(fa) == f);
      int total = 0;
      for (const auto& fc : fa.factors) total += fc.multiplicity;
      CHECK(total == 3);
    }
  }
}
