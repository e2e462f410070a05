#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "valext/errors.hpp"
#include "valext/free_norms.hpp"
#include "valext/random.hpp"
#include "valext/scenario.hpp"
#include "valext/tower.hpp"

namespace valext {

namespace {

struct GoldenCase {
  std::string name;
  std::string expected;
  std::function<std::string()> compute;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string factor_string(const Factorization& f) {
  std::string out;
  for (const auto& fc : f.factors) {
    out += "(" + fc.poly.to_string() + ")";
    if (fc.multiplicity > 1) out += "^" + std::to_string(fc.multiplicity);
  }
  return out;
}

FieldPtr tower(const std::string& t) { return parse_tower(t); }

std::vector<GoldenCase> corpus() {
  std::vector<GoldenCase> c;
  // value groups
  c.push_back({"value_groups.p_torsion_third", "no", [] {
                 return yn(is_p_torsion_quotient(ValueGroup(1), ValueGroup(1, 3, 1), 2));
               }});
  // fields
  c.push_back({"exact_fields.separable_y2_minus_a_F2a", "no", [] {
                 auto F = tower("base=F2; gen a: transcendental");
                 return yn(is_separable_step(extend_tower(F, "gen r: algebraic y^2 - a")));
               }});
  c.push_back({"exact_fields.separable_y3_y_1_F2", "yes", [] {
                 return yn(is_separable_step(tower("base=F2; gen c: algebraic y^3 - y - 1")));
               }});
  c.push_back({"exact_fields.radicial_transcendental", "no", [] {
                 auto K = tower("base=F2; gen a: transcendental");
                 return yn(is_radicial(K, extend_tower(K, "gen x: transcendental"), 2));
               }});
  c.push_back({"exact_fields.closure_F2a_N1", "base=F2; gen a^(1/2): transcendental; square=a", [] {
                 auto r = perfect_closure_truncated(tower("base=F2; gen a: transcendental"), 2, 1);
                 FieldElement g = FieldElement::generator(r.field, 1);
                 bool ok = g.pow(2) == r.embedding(FieldElement::generator(r.embedding.src(), 1));
                 return print_tower(r.field) + "; square=" + (ok ? "a" : "?");
               }});
  c.push_back({"exact_fields.closure_F3st_N1", "F3(s^(1/3))(t^(1/3)); degree 9", [] {
                 auto r = perfect_closure_truncated(tower("base=F3; gen s: transcendental; gen t: transcendental"), 3, 1);
                 long degree = 1;
                 for (int l = 1; l <= r.field->depth(); ++l) {
                   Elt z = r.field->generator(l);
                   long d = 1;
                   while (!in_generated_subfield(r.field, r.embedding.images(), z)) {
                     z = r.field->pow(z, 3);
                     d *= 3;
                   }
                   degree *= d;
                 }
                 return r.field->short_name() + "; degree " + std::to_string(degree);
               }});
  // poly
  c.push_back({"poly.gcd_F3", "y^2 + 1", [] {
                 auto F = tower("base=F3");
                 return gcd(UPoly::parse(F, "y^3 + y"), UPoly::parse(F, "y^2 + 1")).to_string();
               }});
  c.push_back({"poly.squarefree_radicial", "part y + a^(1/2); multiplicity 2", [] {
                 auto F = perfect_closure_truncated(tower("base=F2; gen a: transcendental"), 2, 1).field;
                 auto sq = squarefree_part(UPoly::parse(F, "y^2 - (a^(1/2))^2"));
                 return "part " + sq.part.to_string() + "; multiplicity " + std::to_string(sq.pieces.at(0).multiplicity);
               }});
  c.push_back({"poly.factor_y2p1_Qi", "(y - i)(y + i)", [] {
                 return factor_string(factor(UPoly::parse(tower("base=Q; gen i: algebraic y^2 + 1"), "y^2 + 1")));
               }});
  c.push_back({"poly.factor_y4p1_F2", "(y + 1)^4", [] {
                 return factor_string(factor(UPoly::parse(tower("base=F2"), "y^4 + 1")));
               }});
  // valued fields
  c.push_back({"valued_fields.value_rank2", "(1, 1)", [] {
                 auto V = parse_valuation("field: base=Q; vars: x1,x2; order: lex");
                 return V.value(parse_element(V.function_field(), "x1^2 + x1*x2")).to_string();
               }});
  c.push_back({"valued_fields.value_fraction", "(-1)", [] {
                 auto V = parse_valuation("field: base=Q; vars: x; order: lex");
                 return V.value(parse_element(V.function_field(), "(x + 1)/x")).to_string();
               }});
  c.push_back({"valued_fields.residue_ratio", "1", [] {
                 auto V = parse_valuation("field: base=Q; vars: x; order: lex");
                 return V.residue(parse_element(V.function_field(), "(1 + x)/(1 - x)")).to_string();
               }});
  c.push_back({"valued_fields.prime_chain_rank2", "F2(a)(x1)(x2) | F2(a)(x2) | F2(a)", [] {
                 auto V = parse_valuation("field: base=F2; gen a: transcendental; vars: x1,x2; order: lex");
                 std::string out;
                 for (const auto& q : V.prime_chain()) out += (out.empty() ? "" : " | ") + q.residue_field->short_name();
                 return out;
               }});
  c.push_back({"valued_fields.prime_chain_rank3", "4", [] {
                 return std::to_string(parse_valuation("field: base=Q; vars: x1,x2,x3; order: lex").prime_chain().size());
               }});
  c.push_back({"valued_fields.hensel_F3", "y + (x^3 + x^2 - x + 1) | y + (-x^3 - x^2 + x + 2)", [] {
                 auto V = parse_valuation("field: base=F3; vars: x; order: lex");
                 auto r = hensel_factor_lift(V, UPoly::parse(V.function_field(), "y^2 - (1 + x)"), 4);
                 return r.factors.at(0).to_string() + " | " + r.factors.at(1).to_string();
               }});
  // free norms
  c.push_back({"free_norms.norm_max_formula", "(-1)", [] {
                 auto V = parse_valuation("field: base=F3; vars: x; order: lex");
                 auto K = V.function_field();
                 return FreeModule(V, 2).norm({parse_element(K, "x^2"), parse_element(K, "x^-1")}).to_string();
               }});
  c.push_back({"free_norms.unit_part", "x^2 ; 1, x", [] {
                 auto V = parse_valuation("field: base=F3; vars: x; order: lex");
                 auto K = V.function_field();
                 auto [a, u] = FreeModule(V, 2).unit_part_factor({parse_element(K, "x^2"), parse_element(K, "x^3")});
                 return a.to_string() + " ; " + u[0].to_string() + ", " + u[1].to_string();
               }});
  c.push_back({"free_norms.unit_part_negative", "(1)/(x) ; 1, x", [] {
                 auto V = parse_valuation("field: base=F3; vars: x; order: lex");
                 auto K = V.function_field();
                 auto [a, u] = FreeModule(V, 2).unit_part_factor({parse_element(K, "x^-1"), parse_element(K, "1")});
                 return a.to_string() + " ; " + u[0].to_string() + ", " + u[1].to_string();
               }});
  c.push_back({"free_norms.submultiplicative", "(0) <= (0) + (0)", [] {
                 auto V = parse_valuation("field: base=F2; vars: x; order: lex");
                 auto A = FreeAlgebra::polynomial(V, {"y"});
                 auto K = V.function_field();
                 Polynomial z = A.generator(0), w = A.generator(0) + A.scalar(parse_element(K, "x"));
                 return A.norm(A.mul(z, w)).to_string() + " <= " + A.norm(z).to_string() + " + " + A.norm(w).to_string();
               }});
  c.push_back({"free_norms.reduced_y2p1", "yes", [] {
                 auto V = parse_valuation("field: base=Q; vars: x; order: lex");
                 return yn(is_reduced_lift(FreeAlgebra::quotient(V, UPoly::parse(V.function_field(), "y^2 + 1"))).certified_reduced);
               }});
  c.push_back({"free_norms.nilpotent_char2", "w + r", [] {
                 auto V = parse_valuation("field: base=F2; gen a: transcendental; gen r: algebraic y^2 - a; vars: x; order: lex");
                 auto rl = is_reduced_lift(FreeAlgebra::quotient(V, UPoly::parse(V.function_field(), "w^2 - a", "w")));
                 return rl.nilpotent ? rl.nilpotent->to_string() : std::string("none");
               }});
  c.push_back({"free_norms.gauss_value", "(0)", [] {
                 auto V = parse_valuation("field: base=F2; vars: x; order: lex");
                 auto G = gauss_extend(FreeAlgebra::polynomial(V, {"y"}));
                 return G.value(parse_element(G.fraction_field(), "x*y^2 + y + x^3")).to_string();
               }});
  c.push_back({"free_norms.gauss_product", "(0)", [] {
                 auto V = parse_valuation("field: base=F2; vars: x; order: lex");
                 auto G = gauss_extend(FreeAlgebra::polynomial(V, {"y"}));
                 return G.value(parse_element(G.fraction_field(), "(y + x)*(y + x^2)")).to_string();
               }});
  c.push_back({"free_norms.gauss_group_residue", "Z lex ; F2(ybar)", [] {
                 auto V = parse_valuation("field: base=F2; vars: x; order: lex");
                 auto G = gauss_extend(FreeAlgebra::polynomial(V, {"y"}));
                 return G.group().to_string() + " ; " + G.residue_field()->short_name();
               }});
  // compositum
  c.push_back({"compositum.Qi_Qi", "2 points, strict yes,yes", [] {
                 auto K = tower("base=Q"), L = tower("base=Q; gen i: algebraic y^2 + 1");
                 auto pts = tensor_decompose(K, L, L);
                 return std::to_string(pts.size()) + " points, strict " + yn(pts[0].strictly_maximal) + "," +
                        yn(pts.at(1).strictly_maximal);
               }});
  c.push_back({"compositum.radicial_char2", "1 point, maximal yes, strict no, multiplicity 2", [] {
                 auto K = tower("base=F2; gen a: transcendental");
                 auto L = extend_tower(K, "gen r: algebraic y^2 - a");
                 auto pts = tensor_decompose(K, L, L);
                 return std::to_string(pts.size()) + " point, maximal " + yn(pts[0].maximal) + ", strict " +
                        yn(pts[0].strictly_maximal) + ", multiplicity " + std::to_string(pts[0].multiplicity);
               }});
  c.push_back({"compositum.separable_sqrt2_Qx", "E separable over M yes, degree 2", [] {
                 auto pts = tensor_decompose(tower("base=Q"), tower("base=Q; gen s: algebraic y^2 - 2"),
                                             tower("base=Q; gen x: transcendental"));
                 auto r = separable_transfer_check(pts.at(0));
                 return "E separable over M " + yn(r.E_over_M_separable) + ", degree " + std::to_string(*r.degree_E_over_M);
               }});
  c.push_back({"compositum.remark_inseparable", "L/K separable yes, E/M separable no, [E:M] 2, maximal no", [] {
                 auto K = tower("base=F2; gen a: transcendental");
                 auto L = extend_tower(K, "gen x: transcendental");
                 auto M = extend_tower(K, "gen m: transcendental");
                 auto E = extend_tower(K, "gen r: algebraic y^2 - a; gen x: transcendental");
                 FieldMap u = FieldMap::by_names(L, E);
                 FieldMap v(M, E, {E->generator(1), parse_element(E, "x + r").raw()});
                 auto pt = make_point(K, L, M, E, u, v);
                 auto P = extend_tower(M, "gen r: algebraic y^2 - a");
                 FieldMap to(P, E, {E->generator(1), parse_element(E, "x + r").raw(), E->generator(2)});
                 FieldMap from(E, P, {P->generator(1), P->generator(3), parse_element(P, "m + r").raw()});
                 auto r = separable_transfer_check(pt, RelativePresentation{P, to, from});
                 return "L/K separable " + yn(r.L_separable) + ", E/M separable " + yn(r.E_over_M_separable) + ", [E:M] " +
                        std::to_string(*r.degree_E_over_M) + ", maximal " + yn(r.flags.maximal);
               }});
  c.push_back({"compositum.subfield_restriction", "yes", [] {
                 auto K = tower("base=Q");
                 auto L = tower("base=Q; gen s: algebraic y^2 - 2; gen x: transcendental");
                 auto M = tower("base=Q; gen s: algebraic y^2 - 2");
                 auto pts = tensor_decompose(K, L, M);
                 return yn(subfield_maximality_check(pts.at(0), 1).restricted_maximal);
               }});
  c.push_back({"compositum.base_change_Qi", "K yes, K0 yes", [] {
                 auto K = tower("base=Q; gen i: algebraic y^2 + 1");
                 auto pts = tensor_decompose(K, extend_tower(K, "gen x: transcendental"), extend_tower(K, "gen z: transcendental"));
                 auto r = base_change_maximality_check(pts.at(0), 0);
                 return "K " + yn(r.maximal_over_K) + ", K0 " + yn(r.maximal_over_K0);
               }});
  c.push_back({"compositum.base_change_char2", "K yes, K0 yes", [] {
                 auto K = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 - a");
                 auto pts = tensor_decompose(K, extend_tower(K, "gen x: transcendental"), extend_tower(K, "gen z: transcendental"));
                 auto r = base_change_maximality_check(pts.at(0), 1);
                 return "K " + yn(r.maximal_over_K) + ", K0 " + yn(r.maximal_over_K0);
               }});
  // extension builder
  auto qi = [] {
    return ExtensionScenario{tower("base=Q"), parse_valuation("field: base=Q; vars: x; order: lex"),
                             tower("base=Q; gen i: algebraic y^2 + 1")};
  };
  auto char2 = [] {
    return ExtensionScenario{tower("base=F2; gen a: transcendental"),
                             parse_valuation("field: base=F2; gen a: transcendental; gen r: algebraic y^2 - a; vars: x; order: lex"),
                             tower("base=F2; gen a: transcendental; gen s: algebraic y^2 - a")};
  };
  c.push_back({"extension_builder.qi", "Z lex ; Q(i)", [qi] {
                 auto b = build_strictly_maximal(qi());
                 return b.delta().to_string() + " ; " + b.residue_field()->short_name();
               }});
  c.push_back({"extension_builder.rank2_transcendental", "Z^2 lex ; Q(t)", [] {
                 auto b = build_strictly_maximal({tower("base=Q"), parse_valuation("field: base=Q; vars: x1,x2; order: lex"),
                                                  tower("base=Q; gen t: transcendental")});
                 return b.delta().to_string() + " ; " + b.residue_field()->short_name();
               }});
  c.push_back({"extension_builder.general_char2", "(1/2)Z lex ; p-torsion yes ; radicial yes", [char2] {
                 auto b = build_general(char2(), 1);
                 return b.delta().to_string() + " ; p-torsion " + yn(b.p_torsion) + " ; radicial " + yn(b.radicial);
               }});
  c.push_back({"extension_builder.verify_qi", "yes", [qi] {
                 auto s = qi();
                 std::mt19937_64 rng(0);
                 return yn(verify_weakly_unramified(build_strictly_maximal(s), s.V, rng).weakly_unramified());
               }});
  c.push_back({"extension_builder.verify_general", "over V no, over truncation yes", [char2] {
                 auto s = char2();
                 std::mt19937_64 rng(0);
                 auto w = verify_weakly_unramified(build_general(s, 1), s.V, rng);
                 return "over V " + yn(w.weakly_unramified()) + ", over truncation " + yn(w.weakly_unramified_over_reference());
               }});
  c.push_back({"extension_builder.spec_qi", "2 <-> 2 ; yes", [qi] {
                 auto s = qi();
                 std::mt19937_64 rng(0);
                 auto r = spec_correspondence(build_strictly_maximal(s), s, rng);
                 return std::to_string(r.primes_V) + " <-> " + std::to_string(r.primes_W) + " ; " + yn(r.ok);
               }});
  c.push_back({"extension_builder.spec_rank2_sqrt2", "3 <-> 3 ; yes", [] {
                 ExtensionScenario s{tower("base=Q"), parse_valuation("field: base=Q; vars: x1,x2; order: lex"),
                                     tower("base=Q; gen s: algebraic y^2 - 2")};
                 std::mt19937_64 rng(0);
                 auto r = spec_correspondence(build_strictly_maximal(s), s, rng);
                 return std::to_string(r.primes_V) + " <-> " + std::to_string(r.primes_W) + " ; " + yn(r.ok);
               }});
  // cli
  c.push_back({"cli.decompose_qi", "points: 2", [] {
                 auto s = parse_scenario("[base]\nbase: Q\n[valuation]\ngens: gen i: algebraic y^2 + 1\n"
                                         "[extension]\nkprime-gens: gen i: algebraic y^2 + 1\n");
                 auto t = to_triple(s);
                 return "points: " + std::to_string(tensor_decompose(t.K, t.L, t.M).size());
               }});
  return c;
}

// Randomized property checks; returns failure descriptions.
std::vector<std::string> properties(std::uint64_t seed, int n) {
  std::vector<std::string> fails;
  std::mt19937_64 rng(seed);
  // Field axioms in a tower with a separable algebraic step over a transcendental one.
  auto F = tower("base=F2; gen a: transcendental; gen r: algebraic y^2 + a*y + a");
  for (int i = 0; i < n; ++i) {
    auto x = random_element(F, rng), y = random_element(F, rng), z = random_element(F, rng);
    if (!((x * y) * z == x * (y * z)) || !(x * (y + z) == x * y + x * z)) fails.push_back("field axioms at " + x.to_string());
    if (!x.is_zero() && !(x * x.inverse()).is_one()) fails.push_back("inverse of " + x.to_string());
  }
  // Ultrametric inequality and multiplicativity of a rank-2 valuation.
  auto V = parse_valuation("field: base=Q; vars: x1,x2; order: lex");
  for (int i = 0; i < n; ++i) {
    auto z = random_fraction(V, rng), t = random_fraction(V, rng);
    if (!(V.value(z * t) == mul(V.value(z), V.value(t)))) fails.push_back("multiplicativity at " + z.to_string());
    if (additive_compare(V.value(z + t), additive_min(V.value(z), V.value(t))) < 0)
      fails.push_back("ultrametric at " + z.to_string());
  }
  // Factorizations multiply back.
  auto P = tower("base=F5");
  for (int i = 0; i < n; ++i) {
    Coeffs c;
    int d = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int k = 0; k < d; ++k) c.push_back(random_element(P, rng).raw());
    c.push_back(P->one());
    UPoly f(P, c);
    auto fa = factor(f);
    UPoly prod = UPoly::constant(fa.unit);
    for (const auto& fc : fa.factors) prod = prod * fc.poly.pow(static_cast<unsigned>(fc.multiplicity));
    if (!(prod == f)) fails.push_back("factor product of " + f.to_string());
  }
  return fails;
}

}  // namespace

int cmd_selftest(const SelftestOptions& opts, std::ostream& out, std::ostream& err) {
  auto cases = corpus();
  if (opts.golden_file) {
    std::ifstream in(*opts.golden_file);
    if (!in) {
      err << "cannot read " << *opts.golden_file << "\n";
      return 1;
    }
    std::map<std::string, std::string> override;
    std::string line;
    while (std::getline(in, line)) {
      auto tab = line.find('\t');
      if (line.empty() || tab == std::string::npos) continue;
      override[line.substr(0, tab)] = line.substr(tab + 1);
    }
    for (auto& c : cases)
      if (override.count(c.name)) c.expected = override[c.name];
  }
  if (opts.dump_golden) {
    for (const auto& c : cases) out << c.name << "\t" << c.expected << "\n";
    return 0;
  }
  int failed = 0;
  for (const auto& c : cases) {
    std::string got;
    try {
      got = c.compute();
    } catch (const std::exception& e) {
      got = std::string("exception: ") + e.what();
    }
    if (got == c.expected) {
      out << "ok    " << c.name << "\n";
    } else {
      ++failed;
      out << "FAIL  " << c.name << ": expected '" << c.expected << "', got '" << got << "'\n";
    }
  }
  const std::uint64_t seed = opts.seed.value_or(0);
  std::vector<std::string> fails;
  try {
    fails = properties(seed, opts.property_samples);
  } catch (const std::exception& e) {
    fails.push_back(std::string("exception: ") + e.what());
  }
  for (const auto& f : fails) out << "FAIL  property: " << f << "\n";
  out << "properties (seed " << seed << "): " << (fails.empty() ? "ok" : std::to_string(fails.size()) + " failures")
      << "\n";
  out << "selftest: " << cases.size() - failed << "/" << cases.size() << " golden cases passed\n";
  return failed == 0 && fails.empty() ? 0 : 4;
}

}  // namespace valext
