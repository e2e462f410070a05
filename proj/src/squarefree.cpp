#include <algorithm>

#include "valext/errors.hpp"
#include "valext/factor.hpp"

namespace valext::detail {

namespace {

std::optional<Coeffs> coefficient_roots(const Field& F, const Coeffs& g) {
  Coeffs out;
  for (const auto& c : g) {
    auto r = pth_root(F, c);
    if (!r) return std::nullopt;
    out.push_back(std::move(*r));
  }
  return out;
}

Coeffs expand_frobenius(const Field& F, const Coeffs& g, std::size_t p) {
  Coeffs out(up::deg(g) * p + 1, F.zero());
  for (int k = 0; k <= up::deg(g); ++k) out[k * p] = g[k];
  return out;
}

void collect(const Field& F, const Coeffs& f, int mult, Pieces& out, std::mt19937_64& rng);

// c = g(y^p) with zero derivative.
void collect_frobenius(const Field& F, const Coeffs& c, int mult, Pieces& out, std::mt19937_64& rng) {
  const std::size_t p = F.characteristic();
  Coeffs g;
  for (int k = 0; k <= up::deg(c); k += static_cast<int>(p)) g.push_back(c[k]);
  Pieces inner;
  collect(F, g, 1, inner, rng);
  for (const auto& piece : inner) {
    if (auto h = coefficient_roots(F, piece.poly)) {
      collect(F, *h, piece.multiplicity * static_cast<int>(p) * mult, out, rng);
      continue;
    }
    // An irreducible r whose coefficients are not all p-th powers gives an irreducible r(y^p).
    std::vector<Coeffs> irr = piece.irreducible || up::deg(piece.poly) == 1
                                  ? std::vector<Coeffs>{piece.poly}
                                  : factor_squarefree(F, piece.poly, rng);
    for (const auto& r : irr) {
      if (auto h = coefficient_roots(F, r))
        out.push_back({*h, piece.multiplicity * static_cast<int>(p) * mult, true});
      else
        out.push_back({expand_frobenius(F, r, p), piece.multiplicity * mult, true});
    }
  }
}

void collect(const Field& F, const Coeffs& f, int mult, Pieces& out, std::mt19937_64& rng) {
  if (up::deg(f) <= 0) return;
  Coeffs fp = up::derivative(F, f);
  if (fp.empty()) {
    collect_frobenius(F, f, mult, out, rng);
    return;
  }
  Coeffs c = up::gcd(F, f, fp);
  Coeffs w = up::exact_quo(F, f, c);
  int i = 1;
  while (up::deg(w) > 0) {
    Coeffs y = up::gcd(F, w, c);
    Coeffs z = up::exact_quo(F, w, y);
    if (up::deg(z) > 0) out.push_back({z, i * mult, up::deg(z) == 1});
    ++i;
    w = std::move(y);
    c = up::exact_quo(F, c, w);
  }
  if (up::deg(c) > 0) collect_frobenius(F, c, mult, out, rng);
}

}  // namespace

Pieces squarefree_raw(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  Pieces out;
  collect(F, up::monic(F, f), 1, out, rng);
  std::sort(out.begin(), out.end(), [&](const Piece& a, const Piece& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
    return up::cmp(F, a.poly, b.poly) < 0;
  });
  return out;
}

}  // namespace valext::detail
