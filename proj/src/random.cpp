#include "valext/random.hpp"

namespace valext {

namespace {

long long uniform(std::mt19937_64& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Elt random_raw(const Field& F, std::mt19937_64& rng, int spread);

Coeffs random_poly(const Field& P, std::mt19937_64& rng, int spread, int max_deg) {
  Coeffs c;
  int d = static_cast<int>(uniform(rng, 0, max_deg));
  for (int i = 0; i <= d; ++i) c.push_back(uniform(rng, 0, 2) == 0 ? P.zero() : random_raw(P, rng, spread));
  up::trim(P, c);
  return c;
}

Elt random_raw(const Field& F, std::mt19937_64& rng, int spread) {
  switch (F.kind()) {
    case FieldKind::Rationals: {
      long den = static_cast<long>(uniform(rng, 1, spread + 1));
      return F.from_rational(mpq_class(static_cast<long>(uniform(rng, -3 * spread, 3 * spread)), static_cast<unsigned long>(den)));
    }
    case FieldKind::PrimeField:
      return F.from_mpz(mpz_class(static_cast<unsigned long>(uniform(rng, 0, static_cast<long long>(F.characteristic()) - 1))));
    case FieldKind::Algebraic: {
      Coeffs c = random_poly(*F.parent(), rng, spread, F.degree() - 1);
      return F.make_algebraic(std::move(c));
    }
    case FieldKind::Transcendental: {
      const Field& P = *F.parent();
      Coeffs num = random_poly(P, rng, spread, spread);
      Coeffs den = uniform(rng, 0, 1) == 0 ? up::constant(P, P.one()) : random_poly(P, rng, spread, 1);
      if (den.empty()) den = up::constant(P, P.one());
      return F.make_ratfun(std::move(num), std::move(den));
    }
  }
  return F.zero();
}

// Polynomial in the valuation variables with exponents in [lo, hi] and coefficients from F.
FieldElement random_laurent(const MonomialValuation& V, std::mt19937_64& rng, int spread, int lo, int hi) {
  FieldElement out = FieldElement::from_int(V.function_field(), 0);
  int terms = static_cast<int>(uniform(rng, 1, spread + 1));
  for (int t = 0; t < terms; ++t) {
    std::vector<std::int64_t> e;
    for (int i = 0; i < V.rank(); ++i) e.push_back(uniform(rng, lo, hi));
    out += V.constant(random_element(V.coefficient_field(), rng, spread)) * V.monomial(e);
  }
  return out;
}

}  // namespace

FieldElement random_element(const FieldPtr& field, std::mt19937_64& rng, int spread) {
  return {field, random_raw(*field, rng, spread)};
}

FieldElement random_nonzero(const FieldPtr& field, std::mt19937_64& rng, int spread) {
  for (;;) {
    FieldElement z = random_element(field, rng, spread);
    if (!z.is_zero()) return z;
  }
}

FieldElement random_fraction(const MonomialValuation& V, std::mt19937_64& rng, int spread) {
  FieldElement num = random_laurent(V, rng, spread, -spread, spread);
  FieldElement den = random_laurent(V, rng, spread, 0, spread);
  if (den.is_zero()) return num;
  return num / den;
}

FieldElement random_unit(const MonomialValuation& V, std::mt19937_64& rng, int spread) {
  FieldElement c = V.constant(random_nonzero(V.coefficient_field(), rng, spread));
  return c + random_in_maximal_ideal(V, rng, spread);
}

FieldElement random_integral(const MonomialValuation& V, std::mt19937_64& rng, int spread) {
  FieldElement num = random_laurent(V, rng, spread, 0, spread);
  return num / random_unit(V, rng, spread);
}

FieldElement random_in_maximal_ideal(const MonomialValuation& V, std::mt19937_64& rng, int spread) {
  FieldElement num = random_laurent(V, rng, spread, 0, spread);
  // Shift into the maximal ideal: multiply by the last variable, whose value is positive.
  FieldElement m = num * V.variable(V.rank() - 1);
  if (uniform(rng, 0, 3) == 0) return FieldElement::from_int(V.function_field(), 0);
  return m;
}

}  // namespace valext
