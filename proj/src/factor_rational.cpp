#include <algorithm>

#include "valext/errors.hpp"
#include "valext/factor.hpp"

namespace valext::detail {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  ztrim(out);
  return out;
}

mpz_class mod(const mpz_class& a, const mpz_class& m) {
  mpz_class r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zmod(const ZPoly& a, const mpz_class& m) {
  ZPoly out;
  for (const auto& c : a) out.push_back(mod(c, m));
  ztrim(out);
  return out;
}

ZPoly symmetric(const ZPoly& a, const mpz_class& m) {
  ZPoly out;
  mpz_class half = m / 2;
  for (const auto& c : a) {
    mpz_class r = mod(c, m);
    if (r > half) r -= m;
    out.push_back(r);
  }
  ztrim(out);
  return out;
}

ZPoly primitive(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  ZPoly out;
  for (const auto& c : a) out.push_back(c / g);
  return out;
}

// Exact quotient a / b over Z, or nullopt.
std::optional<ZPoly> zdivide(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return std::nullopt;
  ZPoly q(r.size() - b.size() + 1, 0);
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = r.back() / b.back();
    int k = static_cast<int>(r.size()) - 1 - db;
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[i + k] -= c * b[i];
    ztrim(r);
  }
  if (!r.empty()) return std::nullopt;
  ztrim(q);
  return q;
}

Coeffs to_fp(const Field& Fp, const ZPoly& a) {
  Coeffs out;
  for (const auto& c : a) out.push_back(Fp.from_mpz(c));
  up::trim(Fp, out);
  return out;
}

ZPoly from_fp(const Coeffs& a) {
  ZPoly out;
  for (const auto& c : a) out.push_back(mpz_class(static_cast<unsigned long>(Field::as_fp(c))));
  return out;
}

// Lifts f = g0*h0 (mod p), g0 monic, to f = g*h (mod p^k).
void hensel_lift(const ZPoly& f, const Field& Fp, const Coeffs& g0, const Coeffs& h0, const mpz_class& p, int k,
                 ZPoly& g, ZPoly& h) {
  Coeffs s, t;
  Coeffs one = up::xgcd(Fp, g0, h0, s, t);
  if (up::deg(one) != 0) throw DomainError("Hensel lifting needs coprime factors");
  g = from_fp(g0);
  h = from_fp(h0);
  mpz_class m = p;
  for (int step = 1; step < k; ++step) {
    ZPoly prod = zmul(g, h);
    ZPoly e(std::max(f.size(), prod.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& c : e) c /= m;
    ztrim(e);
    Coeffs ep = to_fp(Fp, e);
    Coeffs dg = up::rem(Fp, up::mul(Fp, t, ep), g0);
    Coeffs dh = up::exact_quo(Fp, up::sub(Fp, ep, up::mul(Fp, h0, dg)), g0);
    ZPoly zdg = from_fp(dg), zdh = from_fp(dh);
    if (g.size() < zdg.size()) g.resize(zdg.size(), 0);
    if (h.size() < zdh.size()) h.resize(zdh.size(), 0);
    for (std::size_t i = 0; i < zdg.size(); ++i) g[i] += m * zdg[i];
    for (std::size_t i = 0; i < zdh.size(); ++i) h[i] += m * zdh[i];
    m *= p;
  }
}

std::vector<unsigned long> small_primes() {
  std::vector<unsigned long> out;
  for (unsigned long n = 3; out.size() < 60; n += 2) {
    bool prime = true;
    for (unsigned long d = 3; d * d <= n; d += 2)
      if (n % d == 0) prime = false;
    if (prime) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<Coeffs> factor_rational(const Field& Q, const Coeffs& f, std::mt19937_64& rng) {
  // Integer primitive form.
  mpz_class L = 1;
  for (const auto& c : f) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), Field::as_q(c).get_den_mpz_t());
  ZPoly F;
  for (const auto& c : f) F.push_back(mpz_class(Field::as_q(c) * L));
  F = primitive(F);
  const int n = static_cast<int>(F.size()) - 1;

  // Choose the admissible prime with the fewest modular factors among a few candidates.
  FieldPtr best_field;
  std::vector<Coeffs> best_factors;
  unsigned long best_p = 0;
  int tried = 0;
  for (unsigned long p : small_primes()) {
    if (mpz_divisible_ui_p(F.back().get_mpz_t(), p)) continue;
    FieldPtr Fp = Field::prime_field(p);
    Coeffs fp = up::monic(*Fp, to_fp(*Fp, F));
    if (up::deg(up::gcd(*Fp, fp, up::derivative(*Fp, fp))) != 0) continue;
    auto fac = factor_finite(*Fp, fp, rng);
    if (best_p == 0 || fac.size() < best_factors.size()) {
      best_p = p;
      best_field = Fp;
      best_factors = std::move(fac);
    }
    if (++tried == 4 || best_factors.size() == 1) break;
  }
  if (best_p == 0) throw CapabilityError("no admissible prime for modular factorization");
  if (best_factors.size() == 1) return {up::monic(Q, f)};
  std::sort(best_factors.begin(), best_factors.end(),
            [&](const Coeffs& a, const Coeffs& b) { return up::cmp(*best_field, a, b) < 0; });

  // Coefficient bound for factors (Mignotte), then the lifting exponent.
  mpz_class norm1 = 0;
  for (const auto& c : F) norm1 += abs(c);
  mpz_class bound = norm1 * abs(F.back());
  bound <<= static_cast<unsigned long>(n + 1);
  const mpz_class p(best_p);
  int k = 1;
  mpz_class pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  // Lift one factor at a time against the cofactor.
  const Field& Fp = *best_field;
  std::vector<ZPoly> lifted;
  ZPoly cur = zmod(F, pk);
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    Coeffs curp = to_fp(Fp, cur);
    Coeffs h0 = up::exact_quo(Fp, curp, best_factors[i]);
    ZPoly g, h;
    hensel_lift(cur, Fp, best_factors[i], h0, p, k, g, h);
    lifted.push_back(zmod(g, pk));
    cur = zmod(h, pk);
  }
  {
    mpz_class lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), cur.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly last;
    for (const auto& c : cur) last.push_back(mod(c * lc_inv, pk));
    lifted.push_back(last);
  }

  // Recombination over subsets of increasing size.
  std::vector<Coeffs> result;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  ZPoly G = F;
  for (std::size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<bool> mask(remaining.size(), false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(s), true);
    do {
      ZPoly cand{G.back()};
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (mask[i]) cand = zmod(zmul(cand, lifted[remaining[i]]), pk);
      cand = primitive(symmetric(cand, pk));
      if (auto q = zdivide(G, cand)) {
        Coeffs qf;
        for (const auto& c : cand) qf.push_back(Q.from_mpz(c));
        result.push_back(up::monic(Q, qf));
        G = primitive(*q);
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < remaining.size(); ++i)
          if (!mask[i]) keep.push_back(remaining[i]);
        remaining = std::move(keep);
        found = true;
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    if (!found) ++s;
  }
  if (G.size() > 1) {
    Coeffs qf;
    for (const auto& c : G) qf.push_back(Q.from_mpz(c));
    result.push_back(up::monic(Q, qf));
  }
  return result;
}

}  // namespace valext::detail
