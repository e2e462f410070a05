#include "valext/extension_builder.hpp"

#include "valext/errors.hpp"
#include "valext/free_norms.hpp"
#include "valext/random.hpp"
#include "valext/tower.hpp"

namespace valext {

namespace {

std::string map_table(const FieldMap& m) {
  std::string out;
  auto names = m.src()->generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? ", " : "") + names[i] + " -> " + m.dst()->print(m.images()[i]);
  return out.empty() ? "(none)" : out;
}

FieldMap lower_map(const FieldMap& m, const FieldPtr& src, const FieldPtr& dst) {
  std::vector<Elt> images;
  for (int l = 1; l <= src->depth(); ++l) {
    auto x = m.dst()->lower(m.images()[l - 1], dst->depth());
    if (!x) throw StructuralError("generator image does not lie in " + dst->short_name());
    images.push_back(std::move(*x));
  }
  return FieldMap(src, dst, std::move(images));
}


// Result of the strict construction over (k, V, k').
struct StrictResult {
  MonomialValuation W;
  CompositumPoint point;
  int point_count;
};

// Checks that the Gauss extension of one step agrees with the monomial valuation over the
// enlarged coefficient field, on the fraction fields and on the residue fields.
void certify_step(const GaussExtension& G, const MonomialValuation& next, std::mt19937_64& rng,
                  std::vector<std::string>& log) {
  FieldMap to = FieldMap::by_names(G.fraction_field(), next.function_field());
  FieldMap back = FieldMap::by_names(next.function_field(), G.fraction_field());
  if (!is_isomorphism_pair(to, back))
    throw StructuralError("Gauss extension field is not isomorphic to " + next.function_field()->short_name());
  FieldMap rto = FieldMap::by_names(G.residue_field(), next.coefficient_field());
  FieldMap rback = FieldMap::by_names(next.coefficient_field(), G.residue_field());
  if (!is_isomorphism_pair(rto, rback))
    throw StructuralError("Gauss residue field is not isomorphic to " + next.coefficient_field()->short_name());
  const int samples = 12;
  for (int s = 0; s < samples; ++s) {
    FieldElement z = random_element(G.fraction_field(), rng, 1);
    FieldElement w = to(z);
    if (!(G.value(z) == next.value(w)))
      throw StructuralError("Gauss value of " + z.to_string() + " disagrees with the monomial valuation");
    if (G.in_ring(z) && !(rto(G.residue(z)) == next.residue(w)))
      throw StructuralError("Gauss residue of " + z.to_string() + " disagrees with the monomial valuation");
  }
  log.push_back("  Gauss extension identified with the monomial valuation over " +
                next.coefficient_field()->short_name() + " (" + std::to_string(samples) + " sampled values agree)");
}

StrictResult build_strict_core(const FieldPtr& k, const MonomialValuation& V, const FieldPtr& kp, int point_index,
                               const FactorOptions& opts, std::uint64_t seed, std::vector<std::string>& log) {
  const FieldPtr& F = V.coefficient_field();
  if (!is_prefix(k, F)) throw StructuralError(k->short_name() + " is not a subfield of " + F->short_name());
  if (!is_prefix(k, kp)) throw StructuralError(kp->short_name() + " does not extend " + k->short_name());
  for (const auto& n : kp->generator_names())
    for (const auto& x : V.vars())
      if (n == x) throw StructuralError("generator " + n + " clashes with a valuation variable");

  auto points = tensor_decompose(k, kp, F, opts);
  if (point_index < 0 || point_index >= static_cast<int>(points.size()))
    throw PreconditionError("point index " + std::to_string(point_index) + " out of range: k' (x)_k F has " +
                            std::to_string(points.size()) + (points.size() == 1 ? " point" : " points"));
  const CompositumPoint& pt = points[point_index];
  log.push_back("point " + std::to_string(point_index) + " of " + std::to_string(points.size()) +
                " of k' (x)_k F chosen, multiplicity " + std::to_string(pt.multiplicity));
  if (!pt.strictly_maximal) {
    std::string why;
    for (const auto& s : pt.steps)
      if (s.multiplicity > 1) why = "factor (" + s.factor->to_string() + ")^" + std::to_string(s.multiplicity);
    throw PreconditionError("point " + std::to_string(point_index) + " of k' (x)_k F is not strictly maximal (" +
                            why + "); use the general construction with a truncation exponent");
  }

  std::mt19937_64 rng(seed);
  MonomialValuation cur = V;
  int level = k->depth();
  for (const auto& s : pt.steps) {
    ++level;
    const FieldPtr& Fc = cur.coefficient_field();
    if (s.transcendental) {
      log.push_back("step " + s.generator + ": transcendental, Gauss extension on V[" + s.name_in_E + "]");
      auto A = FreeAlgebra::polynomial(cur, {s.name_in_E});
      GaussExtension G = gauss_extend(A, "");
      MonomialValuation next(pt.E->level(Fc->depth() + 1), cur.vars(), cur.group(), cur.weight());
      certify_step(G, next, rng, log);
      cur = std::move(next);
      continue;
    }
    const FieldPtr Lprev = kp->level(level - 1);
    FieldMap u_cur = lower_map(pt.u.restrict_to(level - 1), Lprev, Fc);
    Coeffs g = up::monic(*Fc, u_cur.apply(kp->level(level)->minpoly()));
    std::string fact = "residual polynomial " + up::print(*Fc, g, s.generator) + " has " +
                       std::to_string(s.factor_count) + " irreducible factor" + (s.factor_count > 1 ? "s" : "");
    log.push_back("step " + s.generator + ": algebraic, " + fact + "; factor " + s.factor->to_string() + " chosen");
    Coeffs h = s.factor->coeffs();
    if (s.factor_count > 1) {
      if (cur.rank() == 1) {
        const FieldPtr& K = cur.function_field();
        UPoly gK(K, up::lift(*K, g, Fc->depth()), s.generator);
        HenselResult hr = hensel_factor_lift(cur, gK, -1, opts);
        if (hr.refused) throw CapabilityError("Hensel lift refused: " + hr.reason);
        std::size_t idx = hr.residual_factors.size();
        for (std::size_t i = 0; i < hr.residual_factors.size(); ++i)
          if (up::equal(*Fc, hr.residual_factors[i].coeffs(), h)) idx = i;
        if (idx == hr.residual_factors.size()) throw StructuralError("chosen factor not among the residual factors");
        bool agrees = up::equal(*K, hr.factors[idx].coeffs(), up::lift(*K, h, Fc->depth()));
        log.push_back("  Hensel lift to precision " + std::to_string(hr.precision) + ": factor " +
                      std::to_string(idx + 1) + " of " + std::to_string(hr.factors.size()) +
                      (agrees ? " equals its residual factor" : " differs from its residual factor"));
        if (!agrees) throw StructuralError("Hensel lift of a constant factor is not constant");
      } else {
        log.push_back("  rank " + std::to_string(cur.rank()) +
                      ": coefficients lie in the residue field, the residual factor is used as is");
      }
    }
    if (s.name_in_E.empty()) {
      log.push_back("  root " + pt.E->print(pt.u.images()[level - 1]) + " already in the residue field");
      continue;
    }
    const FieldPtr& K = cur.function_field();
    UPoly f(K, up::lift(*K, h, Fc->depth()), s.name_in_E);
    auto A = FreeAlgebra::quotient(cur, f);
    GaussExtension G = gauss_extend(A, "");
    log.push_back("  Gauss extension on V[" + s.name_in_E + "]/(" + f.to_string() + ")");
    MonomialValuation next(pt.E->level(Fc->depth() + 1), cur.vars(), cur.group(), cur.weight());
    certify_step(G, next, rng, log);
    cur = std::move(next);
  }
  if (!same_tower(cur.coefficient_field(), pt.E)) throw StructuralError("construction did not reach the composed field");
  return StrictResult{cur, pt, static_cast<int>(points.size())};
}

}  // namespace

BuiltExtension build_strictly_maximal(const ExtensionScenario& scn) {
  std::vector<std::string> log;
  log.push_back("strict construction over " + scn.V.describe());
  StrictResult r = build_strict_core(scn.k, scn.V, scn.kprime, scn.point_index, scn.factor_options, scn.seed, log);
  const FieldPtr& K = scn.V.function_field();
  FieldMap K_to_W = FieldMap::by_names(K, r.W.function_field());
  return BuiltExtension{
      .W = r.W,
      .gamma = scn.V.group(),
      .reference = scn.V,
      .K_to_reference = FieldMap::identity(K),
      .K_to_W = K_to_W,
      .reference_to_W = K_to_W,
      .kprime_to_F1 = r.point.u,
      .F_to_F1 = r.point.v,
      .base = scn.k,
      .extension = scn.kprime,
      .extension_to_F1 = r.point.u,
      .general = false,
      .truncation = 0,
      .p = scn.k->characteristic() == 0 ? 1 : scn.k->characteristic(),
      .point_index = scn.point_index,
      .point_count = r.point_count,
      .p_torsion = true,
      .radicial = true,
      .provenance = std::move(log),
  };
}

BuiltExtension build_general(const ExtensionScenario& scn, int N) {
  const std::uint64_t p = scn.k->characteristic();
  if (p == 0) {
    BuiltExtension b = build_strictly_maximal(scn);
    b.provenance.insert(b.provenance.begin(), "characteristic 0: general construction is the strict one");
    return b;
  }
  if (N < 0) throw PreconditionError("truncation exponent must be nonnegative");
  const MonomialValuation& V = scn.V;
  const FieldPtr& F = V.coefficient_field();
  if (!is_prefix(scn.k, F)) throw StructuralError(scn.k->short_name() + " is not a subfield of " + F->short_name());
  std::vector<std::string> log;
  log.push_back("general construction, truncation N = " + std::to_string(N));

  std::int64_t q = 1;
  for (int i = 0; i < N; ++i) q *= static_cast<std::int64_t>(p);
  ClosureResult closure = perfect_closure_truncated(F, p, N);
  const FieldPtr& Fd = closure.field;
  FieldPtr kd = Fd->level(scn.k->depth());
  std::vector<std::string> vars;
  for (const auto& x : V.vars()) vars.push_back(N == 0 ? x : root_name(x, q));
  ValueGroup gd(V.rank(), p, V.group().denom_exponent() + N);
  MonomialValuation Vd(Fd, vars, gd, V.weight());
  log.push_back("truncated closure: " + Vd.describe() + ", group " + gd.to_string());

  // K -> K-dagger: coefficient field through the closure embedding, x -> (x')^q.
  const FieldPtr& K = V.function_field();
  const FieldPtr& Kd = Vd.function_field();
  std::vector<Elt> images;
  for (int l = 1; l <= F->depth(); ++l) images.push_back(Kd->lift(closure.embedding.images()[l - 1], Fd->depth()));
  for (std::size_t i = 0; i < vars.size(); ++i) images.push_back(Vd.variable(i).pow(q).raw());
  FieldMap K_to_Kd(K, Kd, std::move(images));

  // k'' = composed extension of k' and k-dagger over k; unique because k-dagger is radicial over k.
  FieldMap k_to_kd = lower_map(closure.embedding.restrict_to(scn.k->depth()), scn.k, kd);
  auto kpp_points = tensor_decompose(k_to_kd, scn.kprime, scn.factor_options);
  log.push_back("k' (x)_k k-dagger has " + std::to_string(kpp_points.size()) + " point" +
                (kpp_points.size() == 1 ? "" : "s") + ", multiplicity " + std::to_string(kpp_points[0].multiplicity));
  if (kpp_points.size() != 1) throw StructuralError("k-dagger is not radicial over k");
  const CompositumPoint& kpp = kpp_points[0];
  log.push_back("k'' = " + print_tower(kpp.E));

  StrictResult r{Vd, kpp, 0};
  try {
    r = build_strict_core(kd, Vd, kpp.E, scn.point_index, scn.factor_options, scn.seed, log);
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string(e.what()) + "; truncation N = " + std::to_string(N) +
                            " is not enough, try a larger N");
  }
  FieldMap ref_to_W = FieldMap::by_names(Kd, r.W.function_field());
  FieldMap K_to_W = K_to_Kd.then(ref_to_W);
  FieldMap kprime_to_F1 = kpp.u.then(r.point.u);
  FieldMap F_to_F1 = closure.embedding.then(r.point.v);

  BuiltExtension b{
      .W = r.W,
      .gamma = V.group(),
      .reference = Vd,
      .K_to_reference = K_to_Kd,
      .K_to_W = K_to_W,
      .reference_to_W = ref_to_W,
      .kprime_to_F1 = kprime_to_F1,
      .F_to_F1 = F_to_F1,
      .base = kd,
      .extension = kpp.E,
      .extension_to_F1 = r.point.u,
      .general = true,
      .truncation = N,
      .p = p,
      .point_index = scn.point_index,
      .point_count = r.point_count,
      .p_torsion = false,
      .radicial = false,
      .provenance = std::move(log),
  };
  b.p_torsion = is_p_torsion_quotient(b.gamma, b.delta(), p);
  std::vector<Elt> gens = kprime_to_F1.images();
  gens.insert(gens.end(), F_to_F1.images().begin(), F_to_F1.images().end());
  b.radicial = is_radicial_over(b.residue_field(), gens, p, std::max(kDefaultRadicialBound, N));
  b.provenance.push_back("Delta/Gamma p-torsion: " + std::string(b.p_torsion ? "yes" : "no") +
                         "; F1 radicial over k'F: " + (b.radicial ? "yes" : "no"));
  return b;
}

std::string BuiltExtension::report() const {
  std::string out;
  out += "GROUP\n";
  out += "  Gamma: " + gamma.to_string() + "\n";
  out += "  Delta: " + delta().to_string() + "\n";
  out += "  Delta = Gamma: " + std::string(delta() == gamma ? "yes" : "no") + "\n";
  if (general) out += "  reference group: " + reference.group().to_string() + "\n";
  out += "RESIDUE\n";
  out += "  F: " + print_tower(F_to_F1.src()) + "\n";
  out += "  F1: " + print_tower(residue_field()) + "\n";
  out += "  k' -> F1: " + map_table(kprime_to_F1) + "\n";
  out += "  F -> F1: " + map_table(F_to_F1) + "\n";
  out += "SPEC\n";
  auto pv = reference.prime_chain();
  auto pw = W.prime_chain();
  out += "  primes: " + std::to_string(pv.size()) + " <-> " + std::to_string(pw.size()) + "\n";
  for (std::size_t j = 0; j < pw.size(); ++j)
    out += "  height " + std::to_string(j) + ": " + pv[j].residue_field->short_name() + " -> " +
           pw[j].residue_field->short_name() + "\n";
  out += "FLAGS\n";
  out += "  path: " + std::string(general ? "general, N = " + std::to_string(truncation) : "strict") + "\n";
  out += "  point: " + std::to_string(point_index) + " of " + std::to_string(point_count) + "\n";
  out += "  p-torsion: " + std::string(general ? (p_torsion ? "yes" : "no") : "n/a") + "\n";
  out += "  radicial: " + std::string(general ? (radicial ? "yes" : "no") : "n/a") + "\n";
  out += "PROVENANCE\n";
  for (std::size_t i = 0; i < provenance.size(); ++i) out += "  " + std::to_string(i + 1) + ". " + provenance[i] + "\n";
  return out;
}

// ---------------------------------------------------------------- verification

namespace {

// z in n: can it be written m * w with m in the maximal ideal of Vbase and w in W?
bool factors_through(const MonomialValuation& base, const FieldMap& base_to_W, const MonomialValuation& W,
                     const FieldElement& z, std::string& witness) {
  std::vector<std::int64_t> e(base.rank(), 0);
  e.back() = 1;
  FieldElement m = base_to_W(base.monomial(e));  // least positive value of the base group
  FieldElement w = z / m;
  if (W.in_ring(w)) return true;
  witness = z.to_string() + " of value " + W.value(z).to_string() + " is not in mW (least positive value " +
            W.value(m).to_string() + ")";
  return false;
}

}  // namespace

WeakUnramifiedReport verify_weakly_unramified(const BuiltExtension& built, const MonomialValuation& V,
                                              std::mt19937_64& rng, int samples) {
  WeakUnramifiedReport rep;
  const MonomialValuation& W = built.W;
  rep.group_equal = built.delta() == V.group();
  rep.group_equal_reference = built.delta() == built.reference.group();
  for (int s = 0; s < samples; ++s) {
    FieldElement z = random_fraction(V, rng);
    FieldElement w = built.K_to_W(z);
    ++rep.samples;
    ValueWithZero vz = V.value(z);
    ValueWithZero vw = W.value(w);
    if (!(vz.embed(W.group()) == vw)) {
      rep.domination = false;
      rep.witnesses.push_back("value of " + z.to_string() + ": " + vz.to_string() + " in V, " + vw.to_string() + " in W");
    }
    if (V.in_maximal_ideal(z) && !W.in_maximal_ideal(w)) {
      rep.domination = false;
      rep.witnesses.push_back(z.to_string() + " in m but not in n");
    }
  }
  // Generators of k' satisfy their relations in F1, whose elements are units of W.
  if (!built.kprime_to_F1.well_defined()) {
    rep.kprime_contained = false;
    rep.witnesses.push_back("k' relations fail in F1");
  }
  for (const auto& g : built.kprime_to_F1.images()) {
    FieldElement c = W.constant(FieldElement(built.residue_field(), g));
    if (!c.is_zero() && !W.is_unit(c)) {
      rep.kprime_contained = false;
      rep.witnesses.push_back("image " + c.to_string() + " of a k' generator is not a unit of W");
    }
  }
  // n = mW on samples of n, including the variables.
  std::vector<FieldElement> in_n;
  for (int i = 0; i < W.rank(); ++i) in_n.push_back(W.variable(i));
  for (int s = 0; s < samples; ++s) {
    FieldElement z = random_in_maximal_ideal(W, rng);
    if (!z.is_zero()) in_n.push_back(z);
  }
  for (const auto& z : in_n) {
    std::string w;
    if (!factors_through(V, built.K_to_W, W, z, w)) {
      if (rep.n_equals_mW) rep.witnesses.push_back("over V: " + w);
      rep.n_equals_mW = false;
    }
    if (!factors_through(built.reference, built.reference_to_W, W, z, w)) {
      if (rep.n_equals_mW_reference) rep.witnesses.push_back("over the reference valuation: " + w);
      rep.n_equals_mW_reference = false;
    }
  }
  return rep;
}

std::string WeakUnramifiedReport::report() const {
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  std::string out = "WEAKLY-UNRAMIFIED\n";
  out += "  Delta = Gamma: " + yn(group_equal) + "\n";
  out += "  Delta = reference group: " + yn(group_equal_reference) + "\n";
  out += "  domination (" + std::to_string(samples) + " samples): " + yn(domination) + "\n";
  out += "  k' relations in W: " + yn(kprime_contained) + "\n";
  out += "  n = mW over V: " + yn(n_equals_mW) + "\n";
  out += "  n = mW over reference: " + yn(n_equals_mW_reference) + "\n";
  out += "  weakly unramified over V: " + yn(weakly_unramified()) + "\n";
  out += "  weakly unramified over reference: " + yn(weakly_unramified_over_reference()) + "\n";
  for (const auto& w : witnesses) out += "  witness: " + w + "\n";
  return out;
}

SpecReport spec_correspondence(const BuiltExtension& built, const ExtensionScenario& scn, std::mt19937_64& rng,
                               int samples) {
  SpecReport rep;
  const MonomialValuation& V = scn.V;
  auto pv = V.prime_chain();
  auto pref = built.reference.prime_chain();
  auto pw = built.W.prime_chain();
  rep.primes_V = static_cast<int>(pv.size());
  rep.primes_W = static_cast<int>(pw.size());
  rep.ok = pv.size() == pw.size();
  const FieldPtr& base = built.base;
  const FieldPtr& ext = built.extension;
  const FieldPtr& Fref = built.reference.coefficient_field();
  const bool ext_separable = is_separable_over(ext, base->depth());
  const bool F_separable = is_separable_over(Fref, base->depth());

  // Sample set of K: random fractions plus the monomials x_i^{+-1}.
  std::vector<FieldElement> zs;
  for (int i = 0; i < V.rank(); ++i) {
    zs.push_back(V.variable(i));
    zs.push_back(V.variable(i).inverse());
  }
  for (int s = 0; s < samples; ++s) zs.push_back(random_fraction(V, rng));

  for (std::size_t j = 0; j < pw.size() && j < pv.size(); ++j) {
    PrimePair pair;
    pair.height = static_cast<int>(j);
    pair.kappa_V = pref[j].residue_field;
    pair.kappa_W = pw[j].residue_field;
    pair.contraction_ok = true;
    for (const auto& z : zs) {
      if (pv[j].contains(z) != pw[j].contains(built.K_to_W(z))) {
        pair.contraction_ok = false;
        pair.detail += "contraction fails at " + z.to_string() + "; ";
        break;
      }
    }
    // kappa(qW) as a composed extension of (extension, kappa(q)) over base.
    FieldMap ext_to_kW = built.extension_to_F1.with_dst(pair.kappa_W);
    FieldMap kV_to_kW = FieldMap::by_names(pair.kappa_V, pair.kappa_W);
    auto points = tensor_decompose(base, ext, pair.kappa_V, scn.factor_options);
    auto idx = match_point(points, pair.kappa_W, ext_to_kW, kV_to_kW);
    if (!idx) {
      pair.detail += "residue field is not a composed extension; ";
    } else {
      const auto& P = points[*idx];
      pair.strictly_maximal = P.strictly_maximal;
      pair.detail += "point " + std::to_string(*idx) + " of " + std::to_string(points.size()) + "; ";
      if (ext_separable) pair.separable_over_kappa = is_separable_over(P.E, pair.kappa_V->depth());
    }
    if (F_separable) {
      auto rev = tensor_decompose(base, pair.kappa_V, ext, scn.factor_options);
      auto r = match_point(rev, pair.kappa_W, kV_to_kW, ext_to_kW);
      pair.separable_over_kprime = r && is_separable_over(rev[*r].E, ext->depth());
    }
    bool good = pair.contraction_ok && pair.strictly_maximal && pair.separable_over_kappa.value_or(true) &&
                pair.separable_over_kprime.value_or(true);
    rep.ok = rep.ok && good;
    rep.pairs.push_back(std::move(pair));
  }
  return rep;
}

std::string SpecReport::report() const {
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  std::string out = "SPEC-CHECK\n";
  out += "  primes: " + std::to_string(primes_V) + " <-> " + std::to_string(primes_W) + "\n";
  for (const auto& p : pairs) {
    out += "  height " + std::to_string(p.height) + ": " + p.kappa_V->short_name() + " -> " + p.kappa_W->short_name();
    out += ", contraction " + yn(p.contraction_ok) + ", strictly maximal " + yn(p.strictly_maximal);
    if (p.separable_over_kappa) out += ", separable over kappa(q) " + yn(*p.separable_over_kappa);
    if (p.separable_over_kprime) out += ", separable over k' " + yn(*p.separable_over_kprime);
    out += "\n";
  }
  out += "  correspondence: " + yn(ok) + "\n";
  return out;
}

}  // namespace valext
