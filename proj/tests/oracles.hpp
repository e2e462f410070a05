#pragma once

// Brute-force references written without the library's polynomial code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

// Polynomials over F_p as coefficient vectors, lowest degree first, no trailing zeros.
using Poly = std::vector<std::int64_t>;

inline std::int64_t modp(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (modp(a * x, p) == 1) return x;
  return 0;
}

// Quotient and remainder of a by b over F_p; b = 0 leaves a as the remainder.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  Poly q;
  if (b.empty()) return {q, a};
  std::int64_t li = inv_mod(b.back(), p);
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    std::size_t shift = a.size() - b.size();
    std::int64_t c = modp(a.back() * li, p);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = modp(a[i + shift] - c * b[i], p);
    trim(a);
  }
  trim(q);
  return {q, a};
}

// Every monic polynomial of the given degree over F_p.
inline std::vector<Poly> monics(int degree, std::int64_t p) {
  std::vector<Poly> out;
  Poly c(degree + 1, 0);
  c[degree] = 1;
  std::function<void(int)> rec = [&](int i) {
    if (i == degree) {
      out.push_back(c);
      return;
    }
    for (std::int64_t v = 0; v < p; ++v) {
      c[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

// Factorization of a monic f over F_p by trial division with every monic polynomial of
// increasing degree. Result: (factor, multiplicity) in lexicographic order of coefficient vectors
// read from the top degree down, which is only used for comparison after sorting.
inline std::vector<std::pair<Poly, int>> factor_by_trial_division(Poly f, std::int64_t p) {
  std::vector<std::pair<Poly, int>> out;
  trim(f);
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    for (const auto& g : monics(d, p)) {
      int m = 0;
      while (static_cast<int>(f.size()) - 1 >= d) {
        auto [q, r] = divmod(f, g, p);
        if (!r.empty()) break;
        f = q;
        ++m;
      }
      if (m > 0) out.push_back({g, m});
    }
  }
  if (f.size() > 1) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.first == f; });
    if (it != out.end())
      ++it->second;
    else
      out.push_back({f, 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// F25 = F5[c]/(c^2 - 2); elements are pairs (a, b) meaning a + b c.
struct F25 {
  std::int64_t a = 0, b = 0;
  friend bool operator==(const F25&, const F25&) = default;
  friend auto operator<=>(const F25&, const F25&) = default;
};
inline F25 add(F25 x, F25 y) { return {modp(x.a + y.a, 5), modp(x.b + y.b, 5)}; }
inline F25 mul(F25 x, F25 y) { return {modp(x.a * y.a + 2 * x.b * y.b, 5), modp(x.a * y.b + x.b * y.a, 5)}; }
inline std::vector<F25> all_f25() {
  std::vector<F25> out;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) out.push_back({a, b});
  return out;
}
// Roots with multiplicity of a monic polynomial over F25 (coefficients lowest first), by
// evaluating at all 25 elements and deflating.
inline std::map<F25, int> roots_f25(std::vector<F25> f) {
  std::map<F25, int> out;
  for (const auto& r : all_f25()) {
    for (;;) {
      if (f.size() < 2) break;
      // synthetic division by (y - r)
      std::vector<F25> q(f.size() - 1);
      F25 carry{};
      for (std::size_t i = f.size(); i-- > 1;) {
        carry = add(f[i], mul(carry, r));
        q[i - 1] = carry;
      }
      F25 rem = add(f[0], mul(carry, r));
      if (!(rem == F25{})) break;
      f = q;
      ++out[r];
    }
  }
  return out;
}

// Solves (y + g(x))(y + h(x)) = y^2 + c1(x) y + c0(x) modulo x^prec over F_p with g(0) = g0 and
// h(0) = h0, one x-coefficient at a time: at order k try every pair (g_k, h_k) in F_p^2 and
// keep the one matching both coefficients of order k. Returns {g, h} or nothing.
inline std::optional<std::pair<Poly, Poly>> hensel_by_undetermined_coefficients(const Poly& c1, const Poly& c0,
                                                                              std::int64_t g0, std::int64_t h0,
                                                                              int prec, std::int64_t p) {
  auto at = [](const Poly& a, int k) { return k < static_cast<int>(a.size()) ? a[k] : 0; };
  Poly g(prec, 0), h(prec, 0);
  g[0] = g0;
  h[0] = h0;
  if (modp(g0 + h0 - at(c1, 0), p) != 0 || modp(g0 * h0 - at(c0, 0), p) != 0) return std::nullopt;
  for (int k = 1; k < prec; ++k) {
    bool found = false;
    for (std::int64_t gk = 0; gk < p && !found; ++gk) {
      for (std::int64_t hk = 0; hk < p && !found; ++hk) {
        g[k] = gk;
        h[k] = hk;
        std::int64_t prod = 0;
        for (int i = 0; i <= k; ++i) prod += g[i] * h[k - i];
        if (modp(g[k] + h[k] - at(c1, k), p) == 0 && modp(prod - at(c0, k), p) == 0) found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  trim(g);
  trim(h);
  return std::make_pair(g, h);
}

}  // namespace oracle
