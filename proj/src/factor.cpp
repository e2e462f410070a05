#include "valext/factor.hpp"

#include <algorithm>
#include <optional>

#include "valext/errors.hpp"
#include "valext/tower.hpp"

namespace valext {

namespace detail {

namespace {

// A root of f in P(t) by the rational root test over P[t]: y = lambda*a/b with monic a | c0,
// monic b | cn, and lambda a common root of the t-coefficients of the cleared equation.
std::optional<Elt> ratfun_root(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  const Field& P = *F.parent();
  const int n = up::deg(f);
  Coeffs L = up::constant(P, P.one());
  for (const auto& c : f) {
    const Coeffs& d = Field::as_ratfun(c).den;
    L = up::mul(P, up::exact_quo(P, L, up::gcd(P, L, d)), d);
  }
  std::vector<Coeffs> c;
  for (const auto& e : f) {
    const RatFun& r = Field::as_ratfun(e);
    c.push_back(up::mul(P, r.num, up::exact_quo(P, L, r.den)));
  }
  if (c[0].empty()) return F.zero();

  auto divisors = [&](const Coeffs& g) {
    std::vector<Coeffs> out{up::constant(P, P.one())};
    for (const auto& piece : factor_raw(P, g, rng)) {
      std::vector<Coeffs> next;
      for (const auto& d : out) {
        Coeffs q = d;
        for (int m = 0; m <= piece.multiplicity; ++m) {
          next.push_back(q);
          q = up::mul(P, q, piece.poly);
        }
      }
      out = std::move(next);
      if (out.size() > 4096)
        throw CapabilityError("too many divisor candidates while searching for a root over " + F.short_name());
    }
    return out;
  };
  const auto as = divisors(c[0]);
  const auto bs = divisors(c[n]);
  for (const auto& a : as) {
    for (const auto& b : bs) {
      if (up::deg(up::gcd(P, a, b)) > 0) continue;
      // terms[i] = c_i a^i b^(n-i) in P[t]; G_k(lambda) = sum_i lambda^i [t^k] terms[i].
      std::vector<Coeffs> terms;
      std::size_t width = 0;
      for (int i = 0; i <= n; ++i) {
        terms.push_back(up::mul(P, c[i], up::mul(P, up::pow(P, a, i), up::pow(P, b, n - i))));
        width = std::max(width, terms.back().size());
      }
      Coeffs g;
      for (std::size_t k = 0; k < width; ++k) {
        Coeffs Gk;
        for (int i = 0; i <= n; ++i) Gk.push_back(k < terms[i].size() ? terms[i][k] : P.zero());
        up::trim(P, Gk);
        g = up::gcd(P, g, Gk);
        if (up::deg(g) == 0) break;
      }
      if (up::deg(g) < 1) continue;
      for (const auto& piece : factor_raw(P, g, rng)) {
        if (up::deg(piece.poly) != 1) continue;
        Elt lambda = P.neg(piece.poly[0]);
        if (P.is_zero(lambda)) continue;
        return F.make_ratfun(up::scale(P, a, lambda), b);
      }
    }
  }
  return std::nullopt;
}

std::vector<Coeffs> factor_with_transcendentals(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  // Coefficients below a trailing run of transcendentals: the parent is algebraically closed here.
  if (F.kind() == FieldKind::Transcendental) {
    const Field& P = *F.parent();
    Coeffs lowered;
    for (const auto& c : f) {
      auto l = F.lower(c, P.depth());
      if (!l) break;
      lowered.push_back(std::move(*l));
    }
    if (lowered.size() == f.size()) {
      std::vector<Coeffs> out;
      for (const auto& g : factor_squarefree(P, lowered, rng)) out.push_back(up::lift(F, g, P.depth()));
      return out;
    }
  }
  FieldPtr self = F.level(F.depth());
  auto split = split_constants(self);
  if (split) {
    const Field& C = *split->constants;
    Coeffs lowered;
    bool constant = true;
    for (const auto& c : f) {
      auto l = split->reordered->lower(split->to_reordered.apply(c), C.depth());
      if (!l) {
        constant = false;
        break;
      }
      lowered.push_back(std::move(*l));
    }
    // C is algebraically closed in C(t1..tr), so irreducibility over C persists.
    if (constant) {
      std::vector<Coeffs> out;
      FieldMap back = FieldMap::inclusion(split->constants, split->reordered).then(split->from_reordered);
      for (const auto& g : factor_squarefree(C, lowered, rng)) out.push_back(back.apply(g));
      return out;
    }
  }
  // Degree <= 3: irreducible exactly when there is no root.
  if (F.kind() == FieldKind::Transcendental && up::deg(f) <= 3) {
    auto r = ratfun_root(F, f, rng);
    if (!r) return {f};
    Coeffs lin{F.neg(*r), F.one()};
    std::vector<Coeffs> out{lin};
    for (auto& g : factor_squarefree(F, up::exact_quo(F, f, lin), rng)) out.push_back(std::move(g));
    return out;
  }
  throw CapabilityError("factorization of " + up::print(F, f, "y") + " over " + F.short_name() +
                        " needs function-field factoring, which is not implemented");
}

}  // namespace

std::vector<Coeffs> factor_squarefree(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  Coeffs m = up::monic(F, f);
  if (up::deg(m) <= 1) return {m};
  if (F.is_finite()) return factor_finite(F, m, rng);
  if (F.transcendental_count() > 0) return factor_with_transcendentals(F, m, rng);
  if (F.kind() == FieldKind::Rationals) return factor_rational(F, m, rng);
  return factor_numberfield(F, m, rng);
}

Pieces factor_raw(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  Pieces out;
  for (const auto& piece : squarefree_raw(F, f, rng)) {
    if (piece.irreducible) {
      out.push_back(piece);
      continue;
    }
    for (auto& g : factor_squarefree(F, piece.poly, rng)) out.push_back({std::move(g), piece.multiplicity, true});
  }
  std::sort(out.begin(), out.end(), [&](const Piece& a, const Piece& b) {
    int c = up::cmp(F, a.poly, b.poly);
    return c != 0 ? c < 0 : a.multiplicity < b.multiplicity;
  });
  return out;
}

}  // namespace detail

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (!same_tower(*a.field(), *b.field())) throw StructuralError("gcd of polynomials over different towers");
  return UPoly(a.field(), up::gcd(*a.field(), a.coeffs(), b.coeffs()), a.var());
}

SquarefreeResult squarefree_part(const UPoly& f) {
  if (f.is_zero()) throw DomainError("square-free part of the zero polynomial");
  std::mt19937_64 rng(FactorOptions{}.seed);
  const Field& F = *f.field();
  SquarefreeResult out{UPoly(f.field(), up::constant(F, F.one()), f.var()), {}};
  for (auto& piece : detail::squarefree_raw(F, f.coeffs(), rng)) {
    UPoly p(f.field(), std::move(piece.poly), f.var());
    out.part = out.part * p;
    out.pieces.push_back({std::move(p), piece.multiplicity});
  }
  return out;
}

Factorization factor(const UPoly& f, const FactorOptions& opts) {
  if (f.is_zero()) throw DomainError("factorization of the zero polynomial");
  if (f.degree() > opts.max_degree)
    throw CapabilityError("degree " + std::to_string(f.degree()) + " exceeds the factorization bound " +
                          std::to_string(opts.max_degree));
  std::mt19937_64 rng(opts.seed);
  Factorization out{f.leading(), {}};
  for (auto& piece : detail::factor_raw(*f.field(), f.coeffs(), rng))
    out.factors.push_back({UPoly(f.field(), std::move(piece.poly), f.var()), piece.multiplicity});
  return out;
}

bool is_irreducible(const FieldPtr& field, const Coeffs& f) {
  if (up::deg(f) < 1) return false;
  std::mt19937_64 rng(FactorOptions{}.seed);
  auto pieces = detail::factor_raw(*field, f, rng);
  return pieces.size() == 1 && pieces[0].multiplicity == 1;
}

}  // namespace valext
