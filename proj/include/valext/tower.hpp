#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valext/field_map.hpp"

namespace valext {

constexpr int kDefaultMaxTranscendence = 3;
constexpr int kDefaultRadicialBound = 8;

// Builds a tower from "base=F2; gen a: transcendental; gen r: algebraic y^2 - a".
// Minimal polynomials are written in y over the generators introduced before them.
FieldPtr parse_tower(std::string_view text, int max_transcendence = kDefaultMaxTranscendence);
// Inverse of parse_tower.
std::string print_tower(const FieldPtr& field);
// Appends the steps of a description without "base=" to an existing tower.
FieldPtr extend_tower(const FieldPtr& base, std::string_view steps,
                      int max_transcendence = kDefaultMaxTranscendence);

// Separability of the top step (true for transcendental steps).
bool is_separable_step(const FieldPtr& field);
// Every algebraic step above the prefix of the given depth is separable.
bool is_separable_over(const FieldPtr& field, int prefix_depth);
// Degree over a prefix; nullopt when a transcendental step lies above it.
std::optional<long> degree_over(const FieldPtr& field, int prefix_depth);
// Every step above the prefix is algebraic.
bool is_algebraic_over(const FieldPtr& field, int prefix_depth);

// Is sup radicial over the image of the embedding: does every generator of sup have a
// p^m-th power (m <= bound) in the image? For a prefix inclusion the membership test is exact;
// for other embeddings it succeeds when the power lies in the subfield spanned by image
// generators that are themselves tower prefixes, or equals an image element.
bool is_radicial(const FieldMap& embedding, std::uint64_t p, int exponent_bound = kDefaultRadicialBound);
// Radicial over the subfield generated by `gens`, membership decided by in_generated_subfield.
bool is_radicial_over(const FieldPtr& sup, const std::vector<Elt>& gens, std::uint64_t p,
                      int exponent_bound = kDefaultRadicialBound);
bool is_radicial(const FieldPtr& sub, const FieldPtr& sup, std::uint64_t p,
                 int exponent_bound = kDefaultRadicialBound);

// Certified membership of z in the subfield generated by `gens`: true when z equals a generator,
// or lies in the largest prefix all of whose generators are among `gens`.
bool in_generated_subfield(const FieldPtr& field, const std::vector<Elt>& gens, const Elt& z);

struct ClosureResult {
  FieldPtr field;       // copy of the tower with renamed generators g^(1/p^N)
  FieldMap embedding;   // original -> copy, g |-> (g')^(p^N)
};

// Adjoins p^N-th roots of every generator. DomainError in characteristic 0.
// Finite (perfect) towers and N = 0 are returned unchanged.
ClosureResult perfect_closure_truncated(const FieldPtr& field, std::uint64_t p, int N);
// Name given to the p^N-th root of a generator.
std::string root_name(const std::string& name, std::int64_t q);

// A tower whose algebraic steps all have constant minimal polynomials is isomorphic to
// C(t1, ..., tr) with C algebraic over the prime field.
struct ConstantSplit {
  FieldPtr constants;
  FieldPtr reordered;
  FieldMap to_reordered;
  FieldMap from_reordered;
};
std::optional<ConstantSplit> split_constants(const FieldPtr& field);

// Two-way certificate that f: A -> B and g: B -> A are mutually inverse isomorphisms.
bool is_isomorphism_pair(const FieldMap& f, const FieldMap& g);

}  // namespace valext
