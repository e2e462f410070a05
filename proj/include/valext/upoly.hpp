#pragma once

#include <string>
#include <vector>

#include "valext/field_element.hpp"

namespace valext {

// Dense univariate arithmetic on raw coefficient lists over one level of a tower.
namespace up {

int deg(const Coeffs& a);
void trim(const Field& F, Coeffs& a);
Coeffs constant(const Field& F, const Elt& c);
Coeffs monomial(const Field& F, const Elt& c, int k);
Coeffs variable(const Field& F);
bool equal(const Field& F, const Coeffs& a, const Coeffs& b);
// Degree first, then coefficients from the constant term upwards.
int cmp(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs neg(const Field& F, const Coeffs& a);
Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs scale(const Field& F, const Coeffs& a, const Elt& c);
Coeffs monic(const Field& F, const Coeffs& a);
// a = q*b + r with deg r < deg b. DomainError when b is zero.
void divrem(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r);
Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs quo(const Field& F, const Coeffs& a, const Coeffs& b);
// Quotient of an exact division; DomainError when the remainder is nonzero.
Coeffs exact_quo(const Field& F, const Coeffs& a, const Coeffs& b);
// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Field& F, const Coeffs& a, const Coeffs& b);
// Monic g = s*a + t*b.
Coeffs xgcd(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs& s, Coeffs& t);
Coeffs derivative(const Field& F, const Coeffs& a);
Elt eval(const Field& F, const Coeffs& a, const Elt& x);
// a(b(y))
Coeffs compose(const Field& F, const Coeffs& a, const Coeffs& b);
Coeffs pow(const Field& F, const Coeffs& a, unsigned e);
Coeffs powmod(const Field& F, const Coeffs& a, const mpz_class& e, const Coeffs& m);
Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m);
// Coefficients mapped one level up (parent -> F) or down.
Coeffs lift(const Field& F, const Coeffs& a, int from_depth);
std::string print(const Field& F, const Coeffs& a, const std::string& var);

}  // namespace up

// Univariate polynomial over a tower, with a display variable name.
class UPoly {
 public:
  UPoly(FieldPtr field, Coeffs coeffs = {}, std::string var = "y");
  static UPoly constant(const FieldElement& c, std::string var = "y");
  static UPoly variable(const FieldPtr& field, std::string var = "y");
  // Parses a polynomial in `var` whose coefficients use the tower's generators.
  static UPoly parse(const FieldPtr& field, std::string_view text, std::string var = "y");

  const FieldPtr& field() const noexcept { return field_; }
  const Coeffs& coeffs() const noexcept { return c_; }
  const std::string& var() const noexcept { return var_; }
  int degree() const noexcept { return up::deg(c_); }
  bool is_zero() const noexcept { return c_.empty(); }
  FieldElement coeff(int i) const;
  FieldElement leading() const;
  bool is_monic() const;
  UPoly monic() const;
  UPoly derivative() const;
  FieldElement operator()(const FieldElement& x) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const FieldElement& c, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b);
  UPoly pow(unsigned e) const;
  // Quotient and remainder.
  std::pair<UPoly, UPoly> divrem(const UPoly& b) const;

  std::string to_string() const { return up::print(*field_, c_, var_); }

 private:
  void check(const UPoly& o) const;
  FieldPtr field_;
  Coeffs c_;
  std::string var_;
};

}  // namespace valext
