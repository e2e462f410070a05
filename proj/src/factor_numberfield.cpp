#include "valext/errors.hpp"
#include "valext/factor.hpp"
#include "valext/linalg.hpp"

namespace valext::detail {

namespace {

// Norm from the top algebraic step down to its parent: det of the multiplication matrix.
Elt element_norm(const Field& F, const Elt& z) { return linalg::determinant(*F.parent(), linalg::multiplication_matrix(F, z)); }

// Newton interpolation over P through (xs[i], ys[i]).
Coeffs interpolate(const Field& P, const std::vector<Elt>& xs, std::vector<Elt> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = P.div(P.sub(ys[i], ys[i - 1]), P.sub(xs[i], xs[i - j]));
      if (i == j) break;
    }
  Coeffs result;
  for (std::size_t i = n; i-- > 0;) {
    result = up::mul(P, result, Coeffs{P.neg(xs[i]), P.one()});
    result = up::add(P, result, up::constant(P, ys[i]));
  }
  return result;
}

// Norm of g in F[y] down to P[y].
Coeffs poly_norm(const Field& F, const Coeffs& g) {
  const Field& P = *F.parent();
  const int n = up::deg(g) * F.degree();
  std::vector<Elt> xs, ys;
  for (int c = 0; c <= n; ++c) {
    xs.push_back(P.from_int(c));
    ys.push_back(element_norm(F, up::eval(F, g, F.from_int(c))));
  }
  return interpolate(P, xs, ys);
}

}  // namespace

std::vector<Coeffs> factor_numberfield(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  const Field& P = *F.parent();
  const Elt alpha = F.gen();
  for (int attempt = 0; attempt < 25; ++attempt) {
    long long s = attempt == 0 ? 0 : ((attempt + 1) / 2) * (attempt % 2 ? 1 : -1);
    // g(y) = f(y - s*alpha)
    Coeffs shift{F.neg(F.mul(F.from_int(s), alpha)), F.one()};
    Coeffs g = up::compose(F, f, shift);
    Coeffs N = poly_norm(F, g);
    if (up::deg(up::gcd(P, N, up::derivative(P, N))) != 0) continue;
    Pieces parts = factor_raw(P, N, rng);
    if (parts.size() == 1) return {up::monic(F, f)};
    std::vector<Coeffs> out;
    Coeffs back{F.mul(F.from_int(s), alpha), F.one()};
    for (const auto& part : parts) {
      Coeffs h = up::gcd(F, g, up::lift(F, part.poly, P.depth()));
      out.push_back(up::monic(F, up::compose(F, h, back)));
    }
    return out;
  }
  throw CapabilityError("no square-free norm found for factorization over " + F.short_name());
}

}  // namespace valext::detail
