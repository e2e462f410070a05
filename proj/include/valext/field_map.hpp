#pragma once

#include <vector>

#include "valext/upoly.hpp"

namespace valext {

// Field homomorphism between towers, fixed by the images of the source generators.
// Prime fields map to prime fields, so characteristics must agree.
class FieldMap {
 public:
  FieldMap(FieldPtr src, FieldPtr dst, std::vector<Elt> images);
  static FieldMap identity(const FieldPtr& field);
  // Inclusion of a prefix of `tower`.
  static FieldMap inclusion(const FieldPtr& prefix, const FieldPtr& tower);
  // Maps generators to equally named generators of dst.
  static FieldMap by_names(const FieldPtr& src, const FieldPtr& dst);

  const FieldPtr& src() const noexcept { return src_; }
  const FieldPtr& dst() const noexcept { return dst_; }
  const std::vector<Elt>& images() const noexcept { return images_; }
  FieldElement image(int level) const { return {dst_, images_.at(level - 1)}; }

  Elt apply(const Elt& x) const;
  FieldElement operator()(const FieldElement& x) const;
  Coeffs apply(const Coeffs& p) const;
  UPoly operator()(const UPoly& p) const;

  // Minimal polynomials of algebraic generators vanish on their images.
  bool well_defined() const;
  // (after o this)
  FieldMap then(const FieldMap& after) const;
  FieldMap restrict_to(int depth) const;
  // Extends by sending a new top generator of `bigger_src` (whose parent is src) to `image`.
  FieldMap extend(const FieldPtr& bigger_src, Elt image) const;
  FieldMap with_dst(const FieldPtr& bigger_dst) const;
  bool is_prefix_inclusion() const;
  // Agreement on every generator.
  bool same_as(const FieldMap& o) const;

 private:
  Elt apply_level(int level, const Elt& x) const;
  Elt eval_poly(int level, const Coeffs& c, const Elt& at) const;

  FieldPtr src_, dst_;
  std::vector<Elt> images_;
};

}  // namespace valext
