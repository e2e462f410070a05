#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "valext/compositum.hpp"
#include "valext/valuation.hpp"

namespace valext {

// k, a monomial valuation V on F(x1..xn) with k a prefix of F, and an extension k' of k
// (k also a prefix of k').
struct ExtensionScenario {
  FieldPtr k;
  MonomialValuation V;
  FieldPtr kprime;
  int truncation = -1;  // N for the general path; negative selects the strict path
  int point_index = 0;
  std::uint64_t seed = 0;
  FactorOptions factor_options{};
};

struct BuiltExtension {
  MonomialValuation W;           // over the residue field F1
  ValueGroup gamma;              // group of V
  MonomialValuation reference;   // valuation the construction ran over: V, or its truncated closure
  FieldMap K_to_reference;       // K -> field of the reference valuation
  FieldMap K_to_W;               // K -> field of W
  FieldMap reference_to_W;
  FieldMap kprime_to_F1;
  FieldMap F_to_F1;
  // The strict construction ran on (base, extension): (k, k'), or (k-dagger, k'') on the general path.
  FieldPtr base;
  FieldPtr extension;
  FieldMap extension_to_F1;
  bool general = false;
  int truncation = 0;
  std::uint64_t p = 1;
  int point_index = 0;
  int point_count = 1;
  bool p_torsion = true;    // Delta/Gamma
  bool radicial = true;     // F1 over the subfield generated by k' and F
  std::vector<std::string> provenance;

  const ValueGroup& delta() const noexcept { return W.group(); }
  const FieldPtr& residue_field() const noexcept { return W.coefficient_field(); }
  std::string report() const;
};

// PreconditionError when the chosen point of k' (x)_k F is not strictly maximal;
// CapabilityError when a factorization or Hensel lift is out of reach.
BuiltExtension build_strictly_maximal(const ExtensionScenario& scn);
// Positive characteristic: runs the strict construction over the truncated perfect closure.
// Characteristic 0 delegates to build_strictly_maximal.
BuiltExtension build_general(const ExtensionScenario& scn, int N);

struct WeakUnramifiedReport {
  bool group_equal = false;           // Delta = Gamma
  bool group_equal_reference = false; // Delta = group of the reference valuation
  int samples = 0;
  bool domination = true;             // values on K agree, m maps into n
  bool kprime_contained = true;       // defining relations of k' hold in W
  bool n_equals_mW = true;            // over V
  bool n_equals_mW_reference = true;  // over the reference valuation
  std::vector<std::string> witnesses;
  bool weakly_unramified() const { return group_equal && domination && n_equals_mW; }
  bool weakly_unramified_over_reference() const {
    return group_equal_reference && domination && n_equals_mW_reference;
  }
  std::string report() const;
};

WeakUnramifiedReport verify_weakly_unramified(const BuiltExtension& built, const MonomialValuation& V,
                                              std::mt19937_64& rng, int samples = 50);

struct PrimePair {
  int height = 0;
  FieldPtr kappa_V, kappa_W;
  bool contraction_ok = false;  // sampled: z in q iff image in qW
  bool strictly_maximal = false;
  std::optional<bool> separable_over_kappa;   // when k'/k is separable
  std::optional<bool> separable_over_kprime;  // when F/k is separable
  std::string detail;
};

struct SpecReport {
  int primes_V = 0, primes_W = 0;
  std::vector<PrimePair> pairs;
  bool ok = false;
  std::string report() const;
};

// Residue checks at each prime run on (k, k', kappa) for the strict path and on the
// truncated data (k-dagger, k'', kappa) for the general path.
SpecReport spec_correspondence(const BuiltExtension& built, const ExtensionScenario& scn, std::mt19937_64& rng,
                               int samples = 20);

}  // namespace valext
