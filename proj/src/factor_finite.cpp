#include "valext/errors.hpp"
#include "valext/factor.hpp"

namespace valext::detail {

namespace {

Elt random_element(const Field& F, std::mt19937_64& rng) {
  switch (F.kind()) {
    case FieldKind::PrimeField:
      return Elt{static_cast<std::uint64_t>(rng() % F.characteristic())};
    case FieldKind::Algebraic: {
      Coeffs c;
      for (int i = 0; i < F.degree(); ++i) c.push_back(random_element(*F.parent(), rng));
      return F.make_algebraic(std::move(c));
    }
    default:
      throw StructuralError("random elements only for finite towers");
  }
}

int extension_degree(const Field& F) {
  return F.kind() == FieldKind::PrimeField ? 1 : F.degree() * extension_degree(*F.parent());
}

Coeffs random_poly(const Field& F, int below, std::mt19937_64& rng) {
  Coeffs a;
  for (int i = 0; i < below; ++i) a.push_back(random_element(F, rng));
  up::trim(F, a);
  return a;
}

// Product of monic irreducibles of degree d.
void equal_degree(const Field& F, const Coeffs& g, int d, const mpz_class& q, std::mt19937_64& rng,
                  std::vector<Coeffs>& out) {
  if (up::deg(g) == d) {
    out.push_back(g);
    return;
  }
  const bool even = F.characteristic() == 2;
  mpz_class e;
  if (!even) {
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
    e = (qd - 1) / 2;
  }
  const int trace_len = extension_degree(F) * d;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Coeffs a = random_poly(F, up::deg(g), rng);
    if (up::deg(a) <= 0) continue;
    Coeffs b;
    if (even) {
      Coeffs t = a, acc = a;
      for (int i = 1; i < trace_len; ++i) {
        t = up::mulmod(F, t, t, g);
        acc = up::add(F, acc, t);
      }
      b = acc;
    } else {
      b = up::sub(F, up::powmod(F, a, e, g), up::constant(F, F.one()));
    }
    Coeffs s = up::gcd(F, g, b);
    if (up::deg(s) > 0 && up::deg(s) < up::deg(g)) {
      equal_degree(F, s, d, q, rng, out);
      equal_degree(F, up::exact_quo(F, g, s), d, q, rng, out);
      return;
    }
  }
  throw CapabilityError("equal-degree splitting did not converge");
}

}  // namespace

std::vector<Coeffs> factor_finite(const Field& F, const Coeffs& f, std::mt19937_64& rng) {
  const mpz_class q = F.cardinality();
  std::vector<Coeffs> out;
  Coeffs rest = up::monic(F, f);
  Coeffs x = up::variable(F);
  Coeffs h = up::rem(F, x, rest);
  for (int i = 1; up::deg(rest) >= 2 * i; ++i) {
    h = up::powmod(F, h, q, rest);
    Coeffs g = up::gcd(F, rest, up::sub(F, h, x));
    if (up::deg(g) > 0) {
      equal_degree(F, g, i, q, rng, out);
      rest = up::exact_quo(F, rest, g);
      h = up::rem(F, h, rest);
    }
  }
  if (up::deg(rest) > 0) out.push_back(rest);
  return out;
}

}  // namespace valext::detail
