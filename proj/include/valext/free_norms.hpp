#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "valext/polynomial.hpp"
#include "valext/valuation.hpp"

namespace valext {

// Values are additive throughout: the norm of z is the least value of a coordinate, so
// norm <= 1 multiplicatively reads norm >= 0 here.

// V^r with basis e_1..e_r; elements of K^r are coordinate vectors.
class FreeModule {
 public:
  using Vec = std::vector<FieldElement>;

  FreeModule(const MonomialValuation& V, std::size_t rank);

  const MonomialValuation& valuation() const noexcept { return V_; }
  std::size_t rank() const noexcept { return rank_; }

  ValueWithZero norm(const Vec& z) const;
  bool contains(const Vec& z) const;               // z in E
  bool in_maximal_submodule(const Vec& z) const;   // z in mE
  // z = alpha * unit with norm(unit) = 0; DomainError for z = 0.
  std::pair<FieldElement, Vec> unit_part_factor(const Vec& z) const;
  Vec zero() const;

 private:
  void check(const Vec& z) const;
  MonomialValuation V_;
  std::size_t rank_;
};

// Free V-algebra: either the polynomial ring V[y1..ym], or a finite-rank algebra given by
// structure constants on a basis e_0 = 1, e_1, ..., e_{r-1}. Elements are sparse polynomials
// over K; in the finite case the exponent {i} of the single variable stands for e_i.
class FreeAlgebra {
 public:
  using Table = std::vector<std::vector<FreeModule::Vec>>;  // e_i * e_j = sum_k table[i][j][k] e_k

  static FreeAlgebra polynomial(const MonomialValuation& V, std::vector<std::string> vars);
  // V[y]/(f) on the basis 1, y, ..., y^(d-1); f monic with coefficients in V.
  static FreeAlgebra quotient(const MonomialValuation& V, const UPoly& f);
  // e_0 must be the unit; every constant must lie in V.
  static FreeAlgebra structure_constants(const MonomialValuation& V, Table table, std::string basis_name = "e");

  bool is_polynomial() const noexcept { return finite_rank_ == 0; }
  std::size_t finite_rank() const noexcept { return finite_rank_; }
  const MonomialValuation& valuation() const noexcept { return V_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  // Monic presentation polynomial of a quotient algebra.
  const std::optional<UPoly>& presentation() const noexcept { return presentation_; }
  const Table& table() const noexcept { return table_; }

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial scalar(const FieldElement& a) const;  // a in K
  Polynomial generator(std::size_t i) const;       // y_i, or e_i in the finite case
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;

  ValueWithZero norm(const Polynomial& z) const;
  bool contains(const Polynomial& z) const;  // z in A
  // Image in A/mA, over the residue field. DomainError when z is not in A.
  Polynomial reduce(const Polynomial& z) const;
  std::pair<FieldElement, Polynomial> unit_part_factor(const Polynomial& z) const;
  // Multiplication in the residue algebra.
  Polynomial residue_mul(const Polynomial& a, const Polynomial& b) const;

  std::string describe() const;

 private:
  FreeAlgebra(MonomialValuation V, std::vector<std::string> vars, std::size_t rank);
  MonomialValuation V_;
  std::vector<std::string> vars_;
  std::size_t finite_rank_;
  Table table_;
  std::optional<UPoly> presentation_;
};

struct NormViolation {
  std::string property;
  std::string witness;
};

struct AlgebraNormReport {
  int scalars_checked = 0;
  int products_checked = 0;
  int units_checked = 0;
  std::vector<NormViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Randomized check of: norm of scalars equals their value, submultiplicativity, norm 0 on units.
// Units are sampled as elements with a unit residue whose inverse lies in A (found exactly for
// finite-rank algebras, scalar units of V for polynomial algebras).
AlgebraNormReport check_algebra_norm(const FreeAlgebra& A, std::mt19937_64& rng, int samples = 100);

struct ReducedLift {
  bool residue_reduced = false;
  bool certified_reduced = false;      // A itself is reduced (follows from residue_reduced)
  std::optional<Polynomial> nilpotent;  // nonzero nilpotent of A/mA when not reduced
  int nilpotency_index = 0;
  std::string diagnosis;
};

// Reducedness of A/mA, lifted to A. Finite-rank algebras without a monic presentation are
// decided through the trace form, which only settles the separable case.
ReducedLift is_reduced_lift(const FreeAlgebra& A);

// Gauss extension of the valuation to Frac(A) when A/mA is a domain.
class GaussExtension {
 public:
  const FreeAlgebra& algebra() const noexcept { return A_; }
  // Frac(A) as a tower over K; new generators are named after the algebra variables.
  const FieldPtr& fraction_field() const noexcept { return frac_; }
  // Frac(A/mA) as a tower over the residue field of V.
  const FieldPtr& residue_field() const noexcept { return residue_; }
  const ValueGroup& group() const noexcept { return A_.valuation().group(); }

  ValueWithZero value(const FieldElement& z) const;
  FieldElement residue(const FieldElement& z) const;
  bool in_ring(const FieldElement& z) const;
  // A -> Frac(A)
  FieldElement embed(const Polynomial& z) const;

 private:
  friend GaussExtension gauss_extend(const FreeAlgebra& A, const std::string& residue_suffix);
  GaussExtension(FreeAlgebra A, FieldPtr frac, FieldPtr residue);
  ValueWithZero value_at(int level, const Elt& z) const;
  Elt residue_at(int level, const Elt& z) const;

  FreeAlgebra A_;
  FieldPtr frac_, residue_;
};

// PreconditionError naming the factorization when A/mA is not a domain. Residue generators
// are the algebra variables with the suffix appended ("y" -> "ybar" for suffix "bar").
GaussExtension gauss_extend(const FreeAlgebra& A, const std::string& residue_suffix = "bar");

}  // namespace valext
