#include <random>

#include "valext/errors.hpp"
#include "valext/valuation.hpp"

namespace valext {

namespace {

// Truncated power series in x over F, as x-polynomials of degree < prec.
struct SeriesRing {
  const Field& F;
  int prec;

  Coeffs truncate(Coeffs a) const {
    if (static_cast<int>(a.size()) > prec) a.resize(prec);
    up::trim(F, a);
    return a;
  }
  Coeffs mul(const Coeffs& a, const Coeffs& b) const { return truncate(up::mul(F, a, b)); }

  Coeffs inverse(const Coeffs& a) const {
    if (a.empty() || F.is_zero(a[0])) throw DomainError("series is not a unit");
    Elt c0 = F.inv(a[0]);
    Coeffs out(prec, F.zero());
    for (int k = 0; k < prec; ++k) {
      Elt s = k == 0 ? F.one() : F.zero();
      for (int i = 1; i <= k && i < static_cast<int>(a.size()); ++i) s = F.sub(s, F.mul(a[i], out[k - i]));
      out[k] = F.mul(s, c0);
    }
    up::trim(F, out);
    return out;
  }

  Coeffs expand(const RatFun& r) const { return mul(r.num, inverse(r.den)); }
};

// Polynomials in y whose coefficients are series.
using SeriesPoly = std::vector<Coeffs>;

SeriesPoly sp_mul(const SeriesRing& R, const SeriesPoly& a, const SeriesPoly& b) {
  if (a.empty() || b.empty()) return {};
  SeriesPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = up::add(R.F, out[i + j], R.mul(a[i], b[j]));
  return out;
}

// Coefficient of x^k in every y-coefficient.
Coeffs slice(const Field& F, const SeriesPoly& a, int k) {
  Coeffs out;
  for (const auto& c : a) out.push_back(k < static_cast<int>(c.size()) ? c[k] : F.zero());
  up::trim(F, out);
  return out;
}

void add_slice(const Field& F, SeriesPoly& a, const Coeffs& d, int k) {
  if (a.size() < d.size()) a.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (F.is_zero(d[i])) continue;
    Coeffs m = up::monomial(F, d[i], k);
    a[i] = up::add(F, a[i], m);
  }
}

SeriesPoly constant_lift(const Field& F, const Coeffs& p) {
  SeriesPoly out;
  for (const auto& c : p) out.push_back(up::constant(F, c));
  return out;
}

// Lifts f = g*h from the coprime residual split g0*h0.
std::pair<SeriesPoly, SeriesPoly> lift_pair(const SeriesRing& R, const SeriesPoly& f, const Coeffs& g0,
                                            const Coeffs& h0) {
  const Field& F = R.F;
  Coeffs s, t;
  Coeffs one = up::xgcd(F, g0, h0, s, t);
  if (up::deg(one) != 0) throw DomainError("residual factors are not coprime");
  SeriesPoly g = constant_lift(F, g0), h = constant_lift(F, h0);
  for (int k = 1; k < R.prec; ++k) {
    SeriesPoly gh = sp_mul(R, g, h);
    SeriesPoly diff(std::max(f.size(), gh.size()));
    for (std::size_t i = 0; i < diff.size(); ++i) {
      Coeffs a = i < f.size() ? f[i] : Coeffs{};
      Coeffs b = i < gh.size() ? gh[i] : Coeffs{};
      diff[i] = up::sub(F, a, b);
    }
    Coeffs e = slice(F, diff, k);
    if (e.empty()) continue;
    Coeffs dg = up::rem(F, up::mul(F, t, e), g0);
    Coeffs dh = up::exact_quo(F, up::sub(F, e, up::mul(F, h0, dg)), g0);
    add_slice(F, g, dg, k);
    add_slice(F, h, dh, k);
  }
  return {g, h};
}

}  // namespace

HenselResult hensel_factor_lift(const MonomialValuation& V, const UPoly& f, int precision, const FactorOptions& opts) {
  if (V.rank() != 1) throw CapabilityError("Hensel lifting is implemented for rank-1 valuations only");
  const FieldPtr& K = V.function_field();
  const FieldPtr& F = V.coefficient_field();
  if (!same_tower(f.field(), K)) throw StructuralError("polynomial is not over the valued field");
  if (f.degree() < 1 || !f.is_monic()) throw PreconditionError("Hensel lifting needs a monic polynomial of positive degree");
  HenselResult out;
  out.precision = precision < 0 ? 2 * f.degree() + 2 : precision;
  if (out.precision < 1) throw PreconditionError("precision must be positive");

  SeriesRing R{*F, out.precision};
  SeriesPoly fs;
  Coeffs fbar;
  for (int i = 0; i <= f.degree(); ++i) {
    FieldElement c = f.coeff(i);
    if (!V.in_ring(c)) throw PreconditionError("coefficient " + c.to_string() + " has negative value");
    fs.push_back(R.expand(Field::as_ratfun(c.raw())));
    fbar.push_back(V.residue(c).raw());
  }
  up::trim(*F, fbar);

  Factorization fact = factor(UPoly(F, fbar, f.var()), opts);
  for (const auto& fc : fact.factors) {
    out.residual_factors.push_back(fc.poly);
    if (fc.multiplicity > 1) {
      out.refused = true;
      out.reason = "residual polynomial " + UPoly(F, fbar, f.var()).to_string() + " is not square-free: factor (" +
                   fc.poly.to_string() + ")^" + std::to_string(fc.multiplicity);
    }
  }
  if (out.refused) return out;
  if (out.residual_factors.size() == 1) {
    out.factors.push_back(f);
    return out;
  }

  auto to_upoly = [&](const SeriesPoly& p) {
    Coeffs c;
    for (const auto& s : p) c.push_back(K->make_ratfun(s, up::constant(*F, F->one())));
    up::trim(*K, c);
    return UPoly(K, c, f.var());
  };

  SeriesPoly rest = fs;
  for (std::size_t i = 0; i + 1 < out.residual_factors.size(); ++i) {
    Coeffs g0 = out.residual_factors[i].coeffs();
    Coeffs h0 = up::constant(*F, F->one());
    for (std::size_t j = i + 1; j < out.residual_factors.size(); ++j)
      h0 = up::mul(*F, h0, out.residual_factors[j].coeffs());
    auto [g, h] = lift_pair(R, rest, g0, h0);
    out.factors.push_back(to_upoly(g));
    rest = std::move(h);
  }
  out.factors.push_back(to_upoly(rest));
  return out;
}

}  // namespace valext
