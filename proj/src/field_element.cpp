#include "valext/field_element.hpp"

#include "valext/errors.hpp"
#include "valext/expr.hpp"

namespace valext {

FieldElement::FieldElement(FieldPtr field, Elt value) : field_(std::move(field)), value_(std::move(value)) {}

FieldElement FieldElement::from_int(const FieldPtr& field, long long n) { return {field, field->from_int(n)}; }

FieldElement FieldElement::from_rational(const FieldPtr& field, const mpq_class& q) {
  return {field, field->from_rational(q)};
}

FieldElement FieldElement::generator(const FieldPtr& field, int level) { return {field, field->generator(level)}; }

FieldElement FieldElement::generator(const FieldPtr& field, const std::string& name) {
  auto names = field->generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return generator(field, static_cast<int>(i) + 1);
  throw StructuralError("no generator named '" + name + "' in " + field->short_name());
}

void FieldElement::check(const FieldElement& o) const {
  if (field_ != o.field_ && !same_tower(*field_, *o.field_))
    throw StructuralError("elements of different towers: " + field_->short_name() + " vs " +
                          o.field_->short_name());
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check(o);
  value_ = field_->add(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check(o);
  value_ = field_->sub(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check(o);
  value_ = field_->mul(value_, o.value_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check(o);
  value_ = field_->div(value_, o.value_);
  return *this;
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(long long e) const { return {field_, field_->pow(value_, e)}; }

std::optional<FieldElement> FieldElement::lower(int d) const {
  auto r = field_->lower(value_, d);
  if (!r) return std::nullopt;
  return FieldElement(field_->level(d), std::move(*r));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check(b);
  return a.field_->equal(a.value_, b.value_);
}

namespace {

struct ElementRing {
  const FieldPtr& F;
  std::vector<std::string> names;
  Elt integer(const mpz_class& n) const { return F->from_mpz(n); }
  Elt symbol(const std::string& s) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return F->generator(static_cast<int>(i) + 1);
    throw ParseError("unknown symbol '" + s + "'");
  }
  Elt add(const Elt& a, const Elt& b) const { return F->add(a, b); }
  Elt sub(const Elt& a, const Elt& b) const { return F->sub(a, b); }
  Elt mul(const Elt& a, const Elt& b) const { return F->mul(a, b); }
  Elt div(const Elt& a, const Elt& b) const {
    if (F->is_zero(b)) throw ParseError("division by zero");
    return F->div(a, b);
  }
  Elt neg(const Elt& a) const { return F->neg(a); }
  Elt pow(const Elt& a, long e) const {
    if (e < 0 && F->is_zero(a)) throw ParseError("negative power of zero");
    return F->pow(a, static_cast<long long>(e));
  }
};

}  // namespace

FieldElement parse_element(const FieldPtr& field, std::string_view text) {
  auto names = field->generator_names();
  auto expr = detail::parse_expression(text, names);
  ElementRing ring{field, names};
  return {field, detail::evaluate<Elt>(*expr, ring)};
}

}  // namespace valext
