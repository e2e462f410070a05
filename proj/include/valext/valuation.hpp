#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valext/factor.hpp"
#include "valext/field_map.hpp"
#include "valext/value_group.hpp"

namespace valext {

class MonomialValuation;

// One prime of the valuation ring, with its residue field and residue map.
struct PrimeIdeal {
  int height = 0;
  // Variables that stay transcendental in the residue field.
  std::vector<std::string> surviving;
  FieldPtr residue_field;
  // Coarsening whose maximal ideal is this prime; empty for the zero prime.
  std::shared_ptr<const MonomialValuation> coarse;

  bool contains(const FieldElement& z) const;
  // z lies in the localization at this prime.
  bool in_localization(const FieldElement& z) const;
  FieldElement residue(const FieldElement& z) const;
};

// Monomial valuation on K = F(x1, ..., xn): the value of a polynomial is the lexicographically
// least exponent vector among its monomials (x1 most significant), scaled by weight / p^N.
// Values are additive: v(x_i) = e_i, v(0) = Zero (infinity).
class MonomialValuation {
 public:
  MonomialValuation(FieldPtr coefficient_field, std::vector<std::string> vars);
  // Variables get value weight / group.denominator(); used for truncated perfect closures.
  MonomialValuation(FieldPtr coefficient_field, std::vector<std::string> vars, ValueGroup group,
                    std::int64_t weight);

  const FieldPtr& coefficient_field() const noexcept { return F_; }
  const FieldPtr& function_field() const noexcept { return K_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  int rank() const noexcept { return static_cast<int>(vars_.size()); }
  const ValueGroup& group() const noexcept { return group_; }
  std::int64_t weight() const noexcept { return weight_; }

  ValueWithZero value(const FieldElement& z) const;
  // Residue in F. DomainError when the value is negative.
  FieldElement residue(const FieldElement& z) const;
  bool in_ring(const FieldElement& z) const;
  bool in_maximal_ideal(const FieldElement& z) const;
  bool is_unit(const FieldElement& z) const;

  FieldElement variable(std::size_t i) const;
  FieldElement constant(const FieldElement& c) const;  // F -> K
  FieldElement monomial(const std::vector<std::int64_t>& exponents) const;
  // Monomial whose value is v; nullopt when v has fractional coordinates relative to the weight.
  std::optional<FieldElement> monomial_with_value(const ValueWithZero& v) const;

  // Primes 0 = q_0 < q_1 < ... < q_n = maximal ideal. q_j consists of the elements whose
  // first j value coordinates are lexicographically positive; its residue field is F(x_{j+1}, ..., x_n).
  std::vector<PrimeIdeal> prime_chain() const;

  // "field: <tower>; vars: x1,x2; order: lex"
  std::string describe() const;

 private:
  struct Initial {
    bool zero = true;
    std::vector<std::int64_t> v;
    Elt coeff;
  };
  Initial initial(int level, const Elt& z) const;
  Initial initial_poly(int level, const Coeffs& p) const;

  FieldPtr F_, K_;
  std::vector<std::string> vars_;
  ValueGroup group_;
  std::int64_t weight_;
};

MonomialValuation parse_valuation(std::string_view text);

struct HenselResult {
  bool refused = false;
  std::string reason;
  int precision = 0;
  std::vector<UPoly> residual_factors;  // over the residue field
  std::vector<UPoly> factors;           // over K; product is congruent to f modulo x^precision
};

// Lifts the factorization of the residual polynomial of a monic f in V[y] (rank 1 only).
// precision < 0 selects 2*deg(f) + 2. Refuses when the residual polynomial has a repeated factor.
HenselResult hensel_factor_lift(const MonomialValuation& V, const UPoly& f, int precision = -1,
                                const FactorOptions& opts = {});

}  // namespace valext
