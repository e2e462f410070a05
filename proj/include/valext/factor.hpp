#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "valext/upoly.hpp"

namespace valext {

struct FactorOptions {
  static constexpr int kDefaultMaxDegree = 12;
  int max_degree = kDefaultMaxDegree;
  // Seed for the randomized equal-degree splitting. The reported order never depends on it.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct Factor {
  UPoly poly;  // monic
  int multiplicity;
};

// f = unit * prod factors^multiplicity, factors monic irreducible, distinct, sorted canonically.
struct Factorization {
  FieldElement unit;
  std::vector<Factor> factors;
};

// Square-free decomposition: f = unit * prod pieces^multiplicity with pieces square-free and
// pairwise coprime; `part` is the product of the pieces.
struct SquarefreeResult {
  UPoly part;
  std::vector<Factor> pieces;
};

// Monic gcd of univariate polynomials.
UPoly gcd(const UPoly& a, const UPoly& b);
SquarefreeResult squarefree_part(const UPoly& f);
// CapabilityError when the degree exceeds opts.max_degree or the field is out of reach.
Factorization factor(const UPoly& f, const FactorOptions& opts = {});
bool is_irreducible(const FieldPtr& field, const Coeffs& f);

// p-th roots in characteristic p. CapabilityError when membership cannot be decided for this
// presentation; nullopt when z is not a p-th power.
std::optional<Elt> pth_root(const Field& F, const Elt& z);
// z = sum_J w_J^p * prod_i C_i^(J_i) over J in {0..p-1}^|C| (index little-endian base p).
std::optional<std::vector<Elt>> p_basis_decompose(const Field& F, const Elt& z, const std::vector<Elt>& C);

namespace detail {

struct Piece {
  Coeffs poly;  // monic
  int multiplicity;
  bool irreducible;  // known irreducible
};
using Pieces = std::vector<Piece>;

// Square-free decomposition of a monic polynomial, sorted by multiplicity then canonically.
Pieces squarefree_raw(const Field& F, const Coeffs& f, std::mt19937_64& rng);
// Monic irreducible factors of a monic square-free polynomial.
std::vector<Coeffs> factor_squarefree(const Field& F, const Coeffs& f, std::mt19937_64& rng);
std::vector<Coeffs> factor_finite(const Field& F, const Coeffs& f, std::mt19937_64& rng);
std::vector<Coeffs> factor_rational(const Field& F, const Coeffs& f, std::mt19937_64& rng);
std::vector<Coeffs> factor_numberfield(const Field& F, const Coeffs& f, std::mt19937_64& rng);
// Factorization without the user degree bound, sorted canonically.
Pieces factor_raw(const Field& F, const Coeffs& f, std::mt19937_64& rng);

}  // namespace detail

}  // namespace valext
