#include "valext/linalg.hpp"

#include "valext/errors.hpp"
#include "valext/upoly.hpp"

namespace valext::linalg {

std::optional<std::vector<Elt>> solve(const Field& F, Matrix A, std::vector<Elt> b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && F.is_zero(A[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    Elt inv = F.inv(A[col][col]);
    for (std::size_t j = col; j < n; ++j) A[col][j] = F.mul(A[col][j], inv);
    b[col] = F.mul(b[col], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || F.is_zero(A[r][col])) continue;
      Elt f = A[r][col];
      for (std::size_t j = col; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(f, A[col][j]));
      b[r] = F.sub(b[r], F.mul(f, b[col]));
    }
  }
  return b;
}

Elt determinant(const Field& F, Matrix A) {
  const std::size_t n = A.size();
  Elt det = F.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && F.is_zero(A[piv][col])) ++piv;
    if (piv == n) return F.zero();
    if (piv != col) {
      std::swap(A[piv], A[col]);
      det = F.neg(det);
    }
    det = F.mul(det, A[col][col]);
    Elt inv = F.inv(A[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (F.is_zero(A[r][col])) continue;
      Elt f = F.mul(A[r][col], inv);
      for (std::size_t j = col; j < n; ++j) A[r][j] = F.sub(A[r][j], F.mul(f, A[col][j]));
    }
  }
  return det;
}

Matrix multiplication_matrix(const Field& F, const Elt& z) {
  if (F.kind() != FieldKind::Algebraic) throw StructuralError("multiplication matrix needs an algebraic level");
  const Field& P = *F.parent();
  const int d = F.degree();
  Matrix M(d, std::vector<Elt>(d, P.zero()));
  Elt col = z;
  for (int j = 0; j < d; ++j) {
    const auto& c = Field::as_poly(col);
    for (int i = 0; i < d && i < static_cast<int>(c.size()); ++i) M[i][j] = c[i];
    col = F.mul(col, F.gen());
  }
  return M;
}

}  // namespace valext::linalg
