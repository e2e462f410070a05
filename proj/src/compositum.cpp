#include "valext/compositum.hpp"

#include <algorithm>
#include <set>

#include "valext/errors.hpp"
#include "valext/tower.hpp"

namespace valext {

namespace {

std::string unique_name(const FieldPtr& E, std::string name) {
  auto names = E->generator_names();
  std::set<std::string> used(names.begin(), names.end());
  while (used.count(name)) name += "'";
  return name;
}

struct Partial {
  FieldPtr E;
  std::vector<Elt> images;  // images of L generators processed so far
  std::vector<CompositumStep> steps;
  int multiplicity = 1;
};

void lift_images(Partial& p, const FieldPtr& bigger) {
  for (auto& x : p.images) x = bigger->lift(x, p.E->depth());
  p.E = bigger;
}

std::string map_table(const FieldMap& m) {
  std::string out;
  auto names = m.src()->generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? ", " : "") + names[i] + " -> " + m.dst()->print(m.images()[i]);
  return out.empty() ? "(none)" : out;
}

std::vector<CompositumPoint> decompose(const FieldMap& K_to_M, const FieldPtr& L, const FactorOptions& opts,
                                       bool prefix) {
  const FieldPtr& K = K_to_M.src();
  const FieldPtr& M = K_to_M.dst();
  if (!is_prefix(K, L)) throw StructuralError(K->short_name() + " is not a subtower of " + L->short_name());
  std::mt19937_64 rng(opts.seed);
  Partial start;
  start.E = M;
  start.images = K_to_M.images();
  std::vector<Partial> current{start};

  for (int d = K->depth() + 1; d <= L->depth(); ++d) {
    const FieldPtr Ld = L->level(d);
    std::vector<Partial> next;
    for (auto& p : current) {
      CompositumStep step;
      step.generator = Ld->name();
      if (Ld->kind() == FieldKind::Transcendental) {
        step.transcendental = true;
        step.name_in_E = unique_name(p.E, Ld->name());
        Partial q = p;
        lift_images(q, Field::adjoin_transcendental(p.E, step.name_in_E));
        q.images.push_back(q.E->gen());
        q.steps.push_back(step);
        next.push_back(std::move(q));
        continue;
      }
      FieldMap u(L->level(d - 1), p.E, p.images);
      Coeffs f = up::monic(*p.E, u.apply(Ld->minpoly()));
      if (up::deg(f) > opts.max_degree)
        throw CapabilityError("degree " + std::to_string(up::deg(f)) + " exceeds the factorization bound " +
                              std::to_string(opts.max_degree));
      auto pieces = detail::factor_raw(*p.E, f, rng);
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& h = pieces[i];
        Partial q = p;
        CompositumStep s = step;
        s.factor = UPoly(p.E, h.poly);
        s.multiplicity = h.multiplicity;
        s.factor_index = static_cast<int>(i);
        s.factor_count = static_cast<int>(pieces.size());
        if (up::deg(h.poly) == 1) {
          q.images.push_back(p.E->neg(h.poly[0]));
        } else {
          s.name_in_E = unique_name(p.E, Ld->name());
          lift_images(q, Field::adjoin_algebraic(p.E, s.name_in_E, h.poly, false));
          q.images.push_back(q.E->gen());
        }
        q.multiplicity *= h.multiplicity;
        q.steps.push_back(std::move(s));
        next.push_back(std::move(q));
      }
    }
    current = std::move(next);
  }

  std::vector<CompositumPoint> out;
  for (auto& p : current) {
    CompositumPoint pt{K, L, M, p.E, FieldMap(L, p.E, p.images), FieldMap::inclusion(M, p.E)};
    pt.multiplicity = p.multiplicity;
    pt.maximal = true;
    pt.strictly_maximal = p.multiplicity == 1;
    pt.steps = std::move(p.steps);
    if (!prefix) pt.K_to_M = K_to_M;
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

std::vector<CompositumPoint> tensor_decompose(const FieldPtr& K, const FieldPtr& L, const FieldPtr& M,
                                              const FactorOptions& opts) {
  if (!is_prefix(K, M)) throw StructuralError(K->short_name() + " is not a subtower of " + M->short_name());
  return decompose(FieldMap::inclusion(K, M), L, opts, true);
}

std::vector<CompositumPoint> tensor_decompose(const FieldMap& K_to_M, const FieldPtr& L, const FactorOptions& opts) {
  if (!K_to_M.well_defined()) throw StructuralError("K -> M is not a field homomorphism");
  return decompose(K_to_M, L, opts, K_to_M.is_prefix_inclusion());
}

CompositumPoint make_point(const FieldPtr& K, const FieldPtr& L, const FieldPtr& M, const FieldPtr& E, FieldMap u,
                           FieldMap v) {
  if (!same_tower(u.src(), L) || !same_tower(u.dst(), E)) throw StructuralError("u must map L to E");
  if (!same_tower(v.src(), M) || !same_tower(v.dst(), E)) throw StructuralError("v must map M to E");
  if (!u.well_defined() || !v.well_defined()) throw StructuralError("u or v is not a field homomorphism");
  CompositumPoint pt{K, L, M, E, std::move(u), std::move(v)};
  if (!is_prefix(K, M)) throw StructuralError("K must be a prefix of M; use the embedding form");
  for (int l = 1; l <= K->depth(); ++l)
    if (!E->equal(pt.u.images()[l - 1], pt.v.images()[l - 1])) throw StructuralError("u and v disagree on K");
  PointFlags f = classify_point(pt);
  pt.maximal = f.maximal;
  pt.strictly_maximal = f.strictly_maximal;
  pt.multiplicity = f.multiplicity;
  return pt;
}

std::optional<std::size_t> match_point(const std::vector<CompositumPoint>& points, const FieldPtr& E,
                                       const FieldMap& u, const FieldMap& v) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& P = points[i];
    if (P.E->transcendental_count() != E->transcendental_count()) continue;
    std::vector<Elt> images(v.images().begin(), v.images().end());
    int l = P.K->depth();
    for (const auto& s : P.steps) {
      ++l;
      if (!s.name_in_E.empty()) images.push_back(u.images()[l - 1]);
    }
    if (static_cast<int>(images.size()) != P.E->depth()) continue;
    try {
      FieldMap psi(P.E, E, images);
      if (!psi.well_defined()) continue;
      bool ok = true;
      for (std::size_t j = 0; j < u.images().size() && ok; ++j)
        ok = E->equal(psi.apply(P.u.images()[j]), u.images()[j]);
      if (ok) return i;
    } catch (const DomainError&) {
      continue;
    }
  }
  return std::nullopt;
}

PointFlags classify_point(const CompositumPoint& pt, const FactorOptions& opts) {
  PointFlags out;
  const int tk = pt.K->transcendental_count();
  const int need = (pt.L->transcendental_count() - tk) + (pt.M->transcendental_count() - tk);
  const int have = pt.E->transcendental_count() - tk;
  if (have != need) {
    out.reason = "transcendence degree of E over K is " + std::to_string(have) + ", a maximal point needs " +
                 std::to_string(need);
    return out;
  }
  auto points = pt.K_to_M ? tensor_decompose(*pt.K_to_M, pt.L, opts) : tensor_decompose(pt.K, pt.L, pt.M, opts);
  auto idx = match_point(points, pt.E, pt.u, pt.v);
  if (!idx) {
    out.reason = "no point of the decomposition is compatible with (u, v)";
    return out;
  }
  out.maximal = true;
  out.multiplicity = points[*idx].multiplicity;
  out.strictly_maximal = out.multiplicity == 1;
  out.reason = "matches decomposition point " + std::to_string(*idx);
  return out;
}

std::string CompositumPoint::report() const {
  std::string out;
  out += "E: " + print_tower(E) + "\n";
  out += "multiplicity: " + std::to_string(multiplicity) + "\n";
  out += std::string("maximal: ") + (maximal ? "yes" : "no") + "\n";
  out += std::string("strictly-maximal: ") + (strictly_maximal ? "yes" : "no") + "\n";
  out += "u: " + map_table(u) + "\n";
  out += "v: " + map_table(v) + "\n";
  for (const auto& s : steps) {
    out += "step " + s.generator + ": ";
    if (s.transcendental) {
      out += "transcendental";
    } else {
      out += "factor " + s.factor->to_string() + " (" + std::to_string(s.factor_index + 1) + " of " +
             std::to_string(s.factor_count) + "), multiplicity " + std::to_string(s.multiplicity);
    }
    out += s.name_in_E.empty() ? "\n" : ", new generator " + s.name_in_E + "\n";
  }
  return out;
}

SeparableTransferReport separable_transfer_check(const CompositumPoint& pt,
                                                 const std::optional<RelativePresentation>& over_M,
                                                 const FactorOptions& opts) {
  SeparableTransferReport rep;
  rep.L_separable = is_separable_over(pt.L, pt.K->depth());
  const int md = pt.M->depth();
  if (pt.v.is_prefix_inclusion()) {
    rep.E_over_M_separable = is_separable_over(pt.E, md);
    rep.degree_E_over_M = degree_over(pt.E, md);
    rep.detail = "E is presented over M";
  } else {
    if (!over_M) throw CapabilityError("E is not presented over M; supply a relative presentation");
    const auto& P = *over_M;
    if (!is_prefix(pt.M, P.tower)) throw StructuralError("relative presentation does not start with M");
    if (!is_isomorphism_pair(P.to_E, P.from_E)) throw StructuralError("relative presentation is not isomorphic to E");
    FieldMap m_to_E = FieldMap::inclusion(pt.M, P.tower).then(P.to_E);
    if (!m_to_E.same_as(pt.v)) throw StructuralError("relative presentation does not restrict to v on M");
    rep.E_over_M_separable = is_separable_over(P.tower, md);
    rep.degree_E_over_M = degree_over(P.tower, md);
    rep.detail = "E presented over M by a certified isomorphism";
  }
  rep.flags = classify_point(pt, opts);
  rep.consistent =
      !(rep.L_separable && rep.flags.maximal) || (rep.flags.strictly_maximal && rep.E_over_M_separable);
  return rep;
}

SubfieldMaximalityReport subfield_maximality_check(const CompositumPoint& pt, int L0_depth, const FactorOptions& opts) {
  if (L0_depth < pt.K->depth() || L0_depth > pt.L->depth()) throw StructuralError("L0 must lie between K and L");
  if (static_cast<int>(pt.steps.size()) != pt.L->depth() - pt.K->depth())
    throw CapabilityError("subfield restriction needs a point produced by tensor_decompose");
  SubfieldMaximalityReport rep;
  rep.point_maximal = classify_point(pt, opts).maximal;
  int e0 = pt.M->depth();
  for (int i = 0; i < L0_depth - pt.K->depth(); ++i)
    if (!pt.steps[i].name_in_E.empty()) ++e0;
  rep.E0 = pt.E->level(e0);
  FieldPtr L0 = pt.L->level(L0_depth);
  std::vector<Elt> images;
  for (int l = 1; l <= L0_depth; ++l) {
    auto x = pt.E->lower(pt.u.images()[l - 1], e0);
    if (!x) throw StructuralError("image of an L0 generator leaves the restricted field");
    images.push_back(std::move(*x));
  }
  CompositumPoint restricted{pt.K, L0, pt.M, rep.E0, FieldMap(L0, rep.E0, images), FieldMap::inclusion(pt.M, rep.E0)};
  restricted.K_to_M = pt.K_to_M;
  rep.restricted_maximal = classify_point(restricted, opts).maximal;
  rep.consistent = !rep.point_maximal || rep.restricted_maximal;
  return rep;
}

BaseChangeReport base_change_maximality_check(const CompositumPoint& pt, int K0_depth, const FactorOptions& opts) {
  if (K0_depth < 0 || K0_depth > pt.K->depth()) throw StructuralError("K0 must be a prefix of K");
  BaseChangeReport rep;
  rep.K_algebraic_over_K0 = is_algebraic_over(pt.K, K0_depth);
  rep.maximal_over_K = classify_point(pt, opts).maximal;
  CompositumPoint over{pt.K->level(K0_depth), pt.L, pt.M, pt.E, pt.u, pt.v};
  if (pt.K_to_M) over.K_to_M = pt.K_to_M->restrict_to(K0_depth);
  rep.maximal_over_K0 = classify_point(over, opts).maximal;
  rep.consistent = !rep.K_algebraic_over_K0 || rep.maximal_over_K == rep.maximal_over_K0;
  return rep;
}

}  // namespace valext
