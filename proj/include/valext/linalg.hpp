#pragma once

#include <optional>
#include <vector>

#include "valext/field.hpp"

namespace valext::linalg {

using Matrix = std::vector<std::vector<Elt>>;  // row major

// Unique solution of A x = b, or nullopt when A is singular.
std::optional<std::vector<Elt>> solve(const Field& F, Matrix A, std::vector<Elt> b);
Elt determinant(const Field& F, Matrix A);
// Matrix of multiplication by z on the basis 1, g, ..., g^(d-1) of an algebraic level over its parent.
Matrix multiplication_matrix(const Field& F, const Elt& z);

}  // namespace valext::linalg
