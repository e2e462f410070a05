#pragma once

#include <random>

#include "valext/valuation.hpp"

namespace valext {

// Small random elements for property checks. `spread` bounds degrees and integer sizes.
FieldElement random_element(const FieldPtr& field, std::mt19937_64& rng, int spread = 2);
FieldElement random_nonzero(const FieldPtr& field, std::mt19937_64& rng, int spread = 2);

// Random elements of K for a monomial valuation: arbitrary, in the ring, in the maximal ideal, units.
FieldElement random_fraction(const MonomialValuation& V, std::mt19937_64& rng, int spread = 2);
FieldElement random_integral(const MonomialValuation& V, std::mt19937_64& rng, int spread = 2);
FieldElement random_in_maximal_ideal(const MonomialValuation& V, std::mt19937_64& rng, int spread = 2);
FieldElement random_unit(const MonomialValuation& V, std::mt19937_64& rng, int spread = 2);

}  // namespace valext
