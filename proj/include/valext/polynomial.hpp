#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "valext/upoly.hpp"

namespace valext {

// Sparse multivariate polynomial over a tower; terms kept in lexicographic exponent order.
class Polynomial {
 public:
  using Exponent = std::vector<unsigned>;

  Polynomial(FieldPtr field, std::vector<std::string> vars);
  // "y^2 - a*x + 3/2": variables from `vars`, every other symbol a generator of the tower.
  static Polynomial parse(const FieldPtr& field, std::vector<std::string> vars, std::string_view text);
  static Polynomial constant(const FieldElement& c, std::vector<std::string> vars);
  static Polynomial variable(const FieldPtr& field, std::vector<std::string> vars, std::size_t i);
  static Polynomial from_upoly(const UPoly& p);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::map<Exponent, Elt>& terms() const noexcept { return terms_; }
  void add_term(const Exponent& e, const Elt& c);
  FieldElement coeff(const Exponent& e) const;

  bool is_zero() const noexcept { return terms_.empty(); }
  int total_degree() const;
  // Index of the only variable that occurs, -1 for constants, -2 when several occur.
  int univariate_index() const;
  // UnsupportedError when more than one variable occurs.
  UPoly to_upoly() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check(const Polynomial& o) const;
  FieldPtr field_;
  std::vector<std::string> vars_;
  std::map<Exponent, Elt> terms_;
};

// Univariate gcd; UnsupportedError for multivariate input.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace valext
