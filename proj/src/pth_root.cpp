#include "valext/errors.hpp"
#include "valext/factor.hpp"
#include "valext/linalg.hpp"

namespace valext {

namespace {

std::size_t ipow(std::size_t p, std::size_t m) {
  std::size_t r = 1;
  while (m--) r *= p;
  return r;
}

// Elements of C that live in the parent level, or CapabilityError.
std::vector<Elt> lower_all(const Field& F, const std::vector<Elt>& C) {
  std::vector<Elt> out;
  for (const auto& c : C) {
    auto l = F.lower(c, F.depth() - 1);
    if (!l) throw CapabilityError("p-th power test: auxiliary element outside the parent of " + F.short_name());
    out.push_back(std::move(*l));
  }
  return out;
}

std::optional<std::vector<Elt>> decompose_transcendental(const Field& F, const Elt& z, const std::vector<Elt>& C) {
  const Field& P = *F.parent();
  const std::size_t p = F.characteristic();
  int t_index = -1;
  std::vector<Elt> low;
  std::vector<std::size_t> low_pos;
  for (std::size_t i = 0; i < C.size(); ++i) {
    if (F.equal(C[i], F.gen())) {
      if (t_index >= 0) throw CapabilityError("p-th power test: repeated auxiliary generator");
      t_index = static_cast<int>(i);
      continue;
    }
    auto l = F.lower(C[i], P.depth());
    if (!l) throw CapabilityError("p-th power test: auxiliary element involves " + F.name() + " non-trivially");
    low.push_back(std::move(*l));
    low_pos.push_back(i);
  }
  const auto& r = Field::as_ratfun(z);
  Coeffs q = up::mul(P, r.num, up::pow(P, r.den, static_cast<unsigned>(p - 1)));
  const std::size_t size = ipow(p, C.size());
  std::vector<Coeffs> W(size);
  for (int k = 0; k <= up::deg(q); ++k) {
    if (P.is_zero(q[k])) continue;
    std::size_t rest = static_cast<std::size_t>(k) % p, kk = static_cast<std::size_t>(k) / p;
    if (t_index < 0 && rest != 0) return std::nullopt;
    auto sub = p_basis_decompose(P, q[k], low);
    if (!sub) return std::nullopt;
    for (std::size_t jl = 0; jl < sub->size(); ++jl) {
      if (P.is_zero((*sub)[jl])) continue;
      std::size_t J = 0, digits = jl;
      for (std::size_t t = 0; t < low_pos.size(); ++t) {
        J += (digits % p) * ipow(p, low_pos[t]);
        digits /= p;
      }
      if (t_index >= 0) J += rest * ipow(p, static_cast<std::size_t>(t_index));
      W[J] = up::add(P, W[J], up::monomial(P, (*sub)[jl], static_cast<int>(kk)));
    }
  }
  std::vector<Elt> out;
  out.reserve(size);
  for (auto& w : W) out.push_back(w.empty() ? F.zero() : F.make_ratfun(std::move(w), r.den));
  return out;
}

std::optional<std::vector<Elt>> decompose_separable(const Field& F, const Elt& z, const std::vector<Elt>& C) {
  const Field& P = *F.parent();
  const std::size_t p = F.characteristic();
  const int n = F.degree();
  std::vector<Elt> low = lower_all(F, C);
  // Columns: coordinates of g^(p*i); these form a basis because the step is separable.
  linalg::Matrix B(n, std::vector<Elt>(n, P.zero()));
  Elt gp = F.pow(F.gen(), static_cast<long long>(p));
  Elt col = F.one();
  for (int i = 0; i < n; ++i) {
    const auto& c = Field::as_poly(col);
    for (int row = 0; row < n && row < static_cast<int>(c.size()); ++row) B[row][i] = c[row];
    col = F.mul(col, gp);
  }
  std::vector<Elt> rhs(n, P.zero());
  const auto& zc = Field::as_poly(z);
  for (int i = 0; i < static_cast<int>(zc.size()); ++i) rhs[i] = zc[i];
  auto e = linalg::solve(P, std::move(B), std::move(rhs));
  if (!e) throw CapabilityError("p-th power test: Frobenius basis is singular");
  const std::size_t size = ipow(p, C.size());
  std::vector<Coeffs> W(size, Coeffs(n, P.zero()));
  for (int i = 0; i < n; ++i) {
    auto sub = p_basis_decompose(P, (*e)[i], low);
    if (!sub) return std::nullopt;
    for (std::size_t J = 0; J < size; ++J) W[J][i] = (*sub)[J];
  }
  std::vector<Elt> out;
  for (auto& w : W) out.push_back(F.make_algebraic(std::move(w)));
  return out;
}

std::optional<std::vector<Elt>> decompose_inseparable(const Field& F, const Elt& z, const std::vector<Elt>& C) {
  const Field& P = *F.parent();
  const std::size_t p = F.characteristic();
  const auto& m = F.minpoly();
  bool binomial = static_cast<std::size_t>(up::deg(m)) == p;
  for (int i = 1; binomial && i < up::deg(m); ++i) binomial = P.is_zero(m[i]);
  if (!binomial) throw CapabilityError("p-th power test: inseparable step " + F.name() + " is not y^p - c");
  const auto& zc = Field::as_poly(z);
  if (up::deg(zc) > 0) return std::nullopt;
  Elt z0 = zc.empty() ? P.zero() : zc[0];
  std::vector<Elt> aux{P.neg(m[0])};
  for (auto& c : lower_all(F, C)) aux.push_back(std::move(c));
  auto sub = p_basis_decompose(P, z0, aux);
  if (!sub) return std::nullopt;
  const std::size_t size = ipow(p, C.size());
  std::vector<Elt> out;
  for (std::size_t J = 0; J < size; ++J) {
    Coeffs w(p, P.zero());
    for (std::size_t j0 = 0; j0 < p; ++j0) w[j0] = (*sub)[j0 + p * J];
    out.push_back(F.make_algebraic(std::move(w)));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Elt>> p_basis_decompose(const Field& F, const Elt& z, const std::vector<Elt>& C) {
  if (F.characteristic() == 0) throw DomainError("p-th roots need positive characteristic");
  switch (F.kind()) {
    case FieldKind::PrimeField: {
      // Frobenius is the identity on F_p.
      std::vector<Elt> out(ipow(F.characteristic(), C.size()), F.zero());
      out[0] = z;
      return out;
    }
    case FieldKind::Transcendental:
      return decompose_transcendental(F, z, C);
    case FieldKind::Algebraic:
      return F.step_separable() ? decompose_separable(F, z, C) : decompose_inseparable(F, z, C);
    case FieldKind::Rationals:
      break;
  }
  throw DomainError("p-th roots need positive characteristic");
}

std::optional<Elt> pth_root(const Field& F, const Elt& z) {
  auto d = p_basis_decompose(F, z, {});
  if (!d) return std::nullopt;
  return (*d)[0];
}

}  // namespace valext
