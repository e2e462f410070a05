#pragma once

#include <string>
#include <string_view>

#include "valext/field.hpp"

namespace valext {

// Element of a tower with value semantics. Binary operations require structurally equal towers.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elt value);

  static FieldElement from_int(const FieldPtr& field, long long n);
  static FieldElement from_rational(const FieldPtr& field, const mpq_class& q);
  // Generator of level l (1..depth).
  static FieldElement generator(const FieldPtr& field, int level);
  static FieldElement generator(const FieldPtr& field, const std::string& name);

  const FieldPtr& field() const noexcept { return field_; }
  const Elt& raw() const noexcept { return value_; }

  bool is_zero() const { return field_->is_zero(value_); }
  bool is_one() const { return field_->is_one(value_); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement inverse() const;
  FieldElement pow(long long e) const;

  // Same element in the prefix of depth d, if it lies there.
  std::optional<FieldElement> lower(int d) const;

  std::string to_string() const { return field_->print(value_); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check(const FieldElement& o) const;

  FieldPtr field_;
  Elt value_;
};

// Parses "(x+1)/x", "a^(1/2)*i - 3/2", ... with the tower's generator names as symbols.
FieldElement parse_element(const FieldPtr& field, std::string_view text);

}  // namespace valext
