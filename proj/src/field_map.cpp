#include "valext/field_map.hpp"

#include "valext/errors.hpp"
#include "valext/upoly.hpp"

namespace valext {

FieldMap::FieldMap(FieldPtr src, FieldPtr dst, std::vector<Elt> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != src_->depth())
    throw StructuralError("field map needs one image per generator of " + src_->short_name());
  if (src_->characteristic() != dst_->characteristic())
    throw StructuralError("field map between different characteristics");
}

FieldMap FieldMap::identity(const FieldPtr& field) { return inclusion(field, field); }

FieldMap FieldMap::inclusion(const FieldPtr& prefix, const FieldPtr& tower) {
  if (!is_prefix(prefix, tower))
    throw StructuralError(prefix->short_name() + " is not a prefix of " + tower->short_name());
  std::vector<Elt> images;
  for (int l = 1; l <= prefix->depth(); ++l) images.push_back(tower->generator(l));
  return FieldMap(prefix, tower, std::move(images));
}

FieldMap FieldMap::by_names(const FieldPtr& src, const FieldPtr& dst) {
  std::vector<Elt> images;
  for (const auto& n : src->generator_names()) images.push_back(FieldElement::generator(dst, n).raw());
  return FieldMap(src, dst, std::move(images));
}

Elt FieldMap::eval_poly(int level, const Coeffs& c, const Elt& at) const {
  const Field& D = *dst_;
  Elt acc = D.zero();
  for (int i = up::deg(c); i >= 0; --i) acc = D.add(D.mul(acc, at), apply_level(level - 1, c[i]));
  return acc;
}

Elt FieldMap::apply_level(int level, const Elt& x) const {
  const Field& D = *dst_;
  if (level == 0) {
    if (std::holds_alternative<mpq_class>(x.v)) return D.from_rational(Field::as_q(x));
    return D.from_int(static_cast<long long>(Field::as_fp(x)));
  }
  const Field& S = *src_->level(level);
  const Elt& g = images_[level - 1];
  if (S.kind() == FieldKind::Transcendental) {
    const auto& r = Field::as_ratfun(x);
    Elt num = eval_poly(level, r.num, g);
    if (up::deg(r.den) == 0) return num;
    Elt den = eval_poly(level, r.den, g);
    if (D.is_zero(den)) throw DomainError("field map sends a nonzero denominator to zero");
    return D.div(num, den);
  }
  return eval_poly(level, Field::as_poly(x), g);
}

Elt FieldMap::apply(const Elt& x) const { return apply_level(src_->depth(), x); }

FieldElement FieldMap::operator()(const FieldElement& x) const {
  if (x.field() != src_ && !same_tower(*x.field(), *src_))
    throw StructuralError("element of " + x.field()->short_name() + " is not in the source " + src_->short_name());
  return {dst_, apply(x.raw())};
}

Coeffs FieldMap::apply(const Coeffs& p) const {
  Coeffs out;
  for (const auto& c : p) out.push_back(apply(c));
  up::trim(*dst_, out);
  return out;
}

UPoly FieldMap::operator()(const UPoly& p) const {
  if (p.field() != src_ && !same_tower(*p.field(), *src_)) throw StructuralError("polynomial over another tower");
  return UPoly(dst_, apply(p.coeffs()), p.var());
}

bool FieldMap::well_defined() const {
  for (int l = 1; l <= src_->depth(); ++l) {
    const Field& S = *src_->level(l);
    if (S.kind() != FieldKind::Algebraic) continue;
    Elt acc = dst_->zero();
    const auto& m = S.minpoly();
    for (int i = up::deg(m); i >= 0; --i) acc = dst_->add(dst_->mul(acc, images_[l - 1]), apply_level(l - 1, m[i]));
    if (!dst_->is_zero(acc)) return false;
  }
  return true;
}

FieldMap FieldMap::then(const FieldMap& after) const {
  if (after.src_ != dst_ && !same_tower(*after.src_, *dst_)) throw StructuralError("maps do not compose");
  std::vector<Elt> images;
  for (const auto& g : images_) images.push_back(after.apply(g));
  return FieldMap(src_, after.dst_, std::move(images));
}

FieldMap FieldMap::restrict_to(int depth) const {
  return FieldMap(src_->level(depth), dst_, std::vector<Elt>(images_.begin(), images_.begin() + depth));
}

FieldMap FieldMap::extend(const FieldPtr& bigger_src, Elt image) const {
  if (bigger_src->depth() != src_->depth() + 1 || !same_tower(*bigger_src->parent(), *src_))
    throw StructuralError("extend needs a one-step extension of the source");
  std::vector<Elt> images = images_;
  images.push_back(std::move(image));
  return FieldMap(bigger_src, dst_, std::move(images));
}

FieldMap FieldMap::with_dst(const FieldPtr& bigger_dst) const {
  if (!is_prefix(dst_, bigger_dst)) throw StructuralError("with_dst needs a tower extending the target");
  std::vector<Elt> images;
  for (const auto& g : images_) images.push_back(bigger_dst->lift(g, dst_->depth()));
  return FieldMap(src_, bigger_dst, std::move(images));
}

bool FieldMap::is_prefix_inclusion() const {
  if (!is_prefix(src_, dst_)) return false;
  for (int l = 1; l <= src_->depth(); ++l)
    if (!dst_->equal(images_[l - 1], dst_->generator(l))) return false;
  return true;
}

bool FieldMap::same_as(const FieldMap& o) const {
  if (!same_tower(*src_, *o.src_) || !same_tower(*dst_, *o.dst_)) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!dst_->equal(images_[i], o.images_[i])) return false;
  return true;
}

}  // namespace valext
