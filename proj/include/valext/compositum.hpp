#pragma once

#include <optional>
#include <string>
#include <vector>

#include "valext/factor.hpp"
#include "valext/field_map.hpp"

namespace valext {

// One step of L above K, as processed over the running composed field.
struct CompositumStep {
  std::string generator;      // name in L
  std::string name_in_E;      // name of the new generator of E, empty when none was needed
  bool transcendental = false;
  std::optional<UPoly> factor;  // chosen monic irreducible factor of the minimal polynomial
  int multiplicity = 1;
  int factor_index = 0;
  int factor_count = 1;
};

// A composed extension (E, u: L -> E, v: M -> E) of L and M over K, i.e. a point of
// Spec(L (x)_K M). Points produced by tensor_decompose have E = M followed by one step per
// step of L above K, so v is a prefix inclusion.
struct CompositumPoint {
  CompositumPoint(FieldPtr K_, FieldPtr L_, FieldPtr M_, FieldPtr E_, FieldMap u_, FieldMap v_)
      : K(std::move(K_)), L(std::move(L_)), M(std::move(M_)), E(std::move(E_)), u(std::move(u_)), v(std::move(v_)) {}

  FieldPtr K, L, M, E;
  FieldMap u, v;
  // Embedding of K into M when K is not a prefix of M.
  std::optional<FieldMap> K_to_M;
  int multiplicity = 1;
  bool maximal = true;
  bool strictly_maximal = true;
  std::vector<CompositumStep> steps;  // empty for points supplied by hand

  std::string report() const;
};

// K must be a prefix of L and of M. Points are ordered by the canonical factor order, step by step.
std::vector<CompositumPoint> tensor_decompose(const FieldPtr& K, const FieldPtr& L, const FieldPtr& M,
                                              const FactorOptions& opts = {});

// Same, with K embedded into M by an arbitrary map (K still a prefix of L).
std::vector<CompositumPoint> tensor_decompose(const FieldMap& K_to_M, const FieldPtr& L, const FactorOptions& opts = {});

// A hand-made point; flags are filled in by classify_point.
CompositumPoint make_point(const FieldPtr& K, const FieldPtr& L, const FieldPtr& M, const FieldPtr& E, FieldMap u,
                           FieldMap v);

// Index of the decomposition point isomorphic to (E, u, v) over L and M, if any. The certificate
// is a well-defined map from the decomposition field onto E compatible with u and v.
std::optional<std::size_t> match_point(const std::vector<CompositumPoint>& points, const FieldPtr& E,
                                       const FieldMap& u, const FieldMap& v);

struct PointFlags {
  bool maximal = false;
  bool strictly_maximal = false;
  int multiplicity = 0;  // 0 when the point is not maximal
  std::string reason;
};

// Maximal: transcendence degrees add up (tr.deg E = tr.deg L + tr.deg M over K) and the point
// matches a decomposition point; the multiplicity is read off the match.
PointFlags classify_point(const CompositumPoint& pt, const FactorOptions& opts = {});

// A presentation of E as a tower over M, with an isomorphism certificate to E; used when v is
// not a prefix inclusion.
struct RelativePresentation {
  FieldPtr tower;      // M is a prefix
  FieldMap to_E;
  FieldMap from_E;
};

struct SeparableTransferReport {
  bool L_separable = false;
  bool E_over_M_separable = false;
  std::optional<long> degree_E_over_M;
  PointFlags flags;
  // L/K separable and the point maximal imply strictly maximal with E/M separable.
  bool consistent = false;
  std::string detail;
};

SeparableTransferReport separable_transfer_check(const CompositumPoint& pt,
                                                 const std::optional<RelativePresentation>& over_M = std::nullopt,
                                                 const FactorOptions& opts = {});

struct SubfieldMaximalityReport {
  bool point_maximal = false;
  bool restricted_maximal = false;
  FieldPtr E0;
  bool consistent = false;  // maximal point restricts to a maximal point
};

// L0 is the prefix of L of the given depth (at least the depth of K). pt must come from tensor_decompose.
SubfieldMaximalityReport subfield_maximality_check(const CompositumPoint& pt, int L0_depth,
                                                   const FactorOptions& opts = {});

struct BaseChangeReport {
  bool maximal_over_K = false;
  bool maximal_over_K0 = false;
  bool K_algebraic_over_K0 = false;
  bool consistent = false;  // the two flags agree when K/K0 is algebraic
};

// K0 is the prefix of K of the given depth; the point is regarded as a point of Spec(L (x)_K0 M).
BaseChangeReport base_change_maximality_check(const CompositumPoint& pt, int K0_depth, const FactorOptions& opts = {});

}  // namespace valext
