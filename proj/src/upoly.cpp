#include "valext/upoly.hpp"

#include "valext/errors.hpp"
#include "valext/expr.hpp"

namespace valext {

namespace up {

int deg(const Coeffs& a) { return static_cast<int>(a.size()) - 1; }

void trim(const Field& F, Coeffs& a) {
  while (!a.empty() && F.is_zero(a.back())) a.pop_back();
}

Coeffs constant(const Field& F, const Elt& c) {
  if (F.is_zero(c)) return {};
  return {c};
}

Coeffs monomial(const Field& F, const Elt& c, int k) {
  if (F.is_zero(c)) return {};
  Coeffs out(k + 1, F.zero());
  out[k] = c;
  return out;
}

Coeffs variable(const Field& F) { return {F.zero(), F.one()}; }

bool equal(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!F.equal(a[i], b[i])) return false;
  return true;
}

int cmp(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = F.cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Coeffs add(const Field& F, const Coeffs& a, const Coeffs& b) {
  const Coeffs& big = a.size() >= b.size() ? a : b;
  const Coeffs& small = a.size() >= b.size() ? b : a;
  Coeffs out(big);
  for (std::size_t i = 0; i < small.size(); ++i) out[i] = F.add(out[i], small[i]);
  trim(F, out);
  return out;
}

Coeffs neg(const Field& F, const Coeffs& a) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(F.neg(c));
  return out;
}

Coeffs sub(const Field& F, const Coeffs& a, const Coeffs& b) { return add(F, a, neg(F, b)); }

Coeffs mul(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, F.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (F.is_zero(b[j])) continue;
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(F, out);
  return out;
}

Coeffs scale(const Field& F, const Coeffs& a, const Elt& c) {
  if (F.is_zero(c)) return {};
  Coeffs out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(F.mul(x, c));
  trim(F, out);
  return out;
}

Coeffs monic(const Field& F, const Coeffs& a) {
  if (a.empty() || F.is_one(a.back())) return a;
  return scale(F, a, F.inv(a.back()));
}

void divrem(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs& q, Coeffs& r) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  r = a;
  trim(F, r);
  int db = deg(b);
  if (deg(r) < db) {
    q.clear();
    return;
  }
  q.assign(deg(r) - db + 1, F.zero());
  bool monic_b = F.is_one(b.back());
  Elt li = monic_b ? F.one() : F.inv(b.back());
  while (deg(r) >= db) {
    int k = deg(r) - db;
    Elt c = monic_b ? r.back() : F.mul(r.back(), li);
    q[k] = c;
    for (int i = 0; i <= db; ++i) {
      if (F.is_zero(b[i])) continue;
      r[i + k] = F.sub(r[i + k], F.mul(c, b[i]));
    }
    r.pop_back();
    trim(F, r);
  }
  trim(F, q);
}

Coeffs rem(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divrem(F, a, b, q, r);
  return r;
}

Coeffs quo(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divrem(F, a, b, q, r);
  return q;
}

Coeffs exact_quo(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs q, r;
  divrem(F, a, b, q, r);
  if (!r.empty()) throw DomainError("inexact polynomial division");
  return q;
}

namespace {

using RingPoly = std::vector<Coeffs>;  // coefficients in P[t], P the parent level

// Clears denominators of a polynomial over P(t).
RingPoly clear_denominators(const Field& F, const Coeffs& a) {
  const Field& P = *F.parent();
  Coeffs L = constant(P, P.one());
  for (const auto& c : a) {
    const Coeffs& d = Field::as_ratfun(c).den;
    L = mul(P, exact_quo(P, L, gcd(P, L, d)), d);
  }
  RingPoly out;
  for (const auto& c : a) {
    const RatFun& r = Field::as_ratfun(c);
    out.push_back(mul(P, r.num, exact_quo(P, L, r.den)));
  }
  return out;
}

// Divides out the content and scales so the leading coefficient is monic in t.
void make_primitive(const Field& P, RingPoly& a) {
  Coeffs g;
  for (const auto& c : a) {
    g = gcd(P, g, c);
    if (deg(g) == 0) break;
  }
  for (auto& c : a) c = exact_quo(P, c, g);
  Elt li = P.inv(a.back().back());
  for (auto& c : a) c = scale(P, c, li);
}

// Primitive remainder sequence in P[t][y].
Coeffs gcd_prs(const Field& F, const Coeffs& a, const Coeffs& b) {
  const Field& P = *F.parent();
  RingPoly x = clear_denominators(F, a), y = clear_denominators(F, b);
  if (x.size() < y.size()) std::swap(x, y);
  make_primitive(P, x);
  make_primitive(P, y);
  while (!y.empty()) {
    RingPoly r = x;
    const Coeffs& lb = y.back();
    while (r.size() >= y.size()) {
      Coeffs lr = r.back();
      std::size_t shift = r.size() - y.size();
      for (auto& c : r) c = mul(P, c, lb);
      for (std::size_t i = 0; i < y.size(); ++i) r[i + shift] = sub(P, r[i + shift], mul(P, lr, y[i]));
      while (!r.empty() && r.back().empty()) r.pop_back();
    }
    if (!r.empty()) make_primitive(P, r);
    x = std::move(y);
    y = std::move(r);
  }
  Coeffs out;
  for (auto& c : x) out.push_back(F.make_ratfun(std::move(c), constant(P, P.one())));
  return monic(F, out);
}

using IntPoly = std::vector<mpz_class>;

IntPoly primitive_integer(const Coeffs& a) {
  mpz_class L = 1;
  for (const auto& c : a) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), Field::as_q(c).get_den_mpz_t());
  IntPoly out;
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_class n = Field::as_q(c).get_num() * (L / Field::as_q(c).get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(n);
  }
  for (auto& c : out) c /= g;
  return out;
}

void make_primitive_integer(IntPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
}

// Primitive remainder sequence in Z[y].
Coeffs gcd_integer(const Field& F, const Coeffs& a, const Coeffs& b) {
  IntPoly x = primitive_integer(a), y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    IntPoly r = x;
    while (r.size() >= y.size()) {
      mpz_class lr = r.back();
      const mpz_class& lb = y.back();
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
      mpz_class mb = lb / g, mr = lr / g;
      std::size_t shift = r.size() - y.size();
      for (auto& c : r) c *= mb;
      for (std::size_t i = 0; i < y.size(); ++i) r[i + shift] -= mr * y[i];
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    if (!r.empty()) make_primitive_integer(r);
    x = std::move(y);
    y = std::move(r);
  }
  Coeffs out;
  for (const auto& c : x) out.push_back(F.from_mpz(c));
  return monic(F, out);
}

}  // namespace

Coeffs gcd(const Field& F, const Coeffs& a, const Coeffs& b) {
  if (F.kind() == FieldKind::Rationals && !a.empty() && !b.empty() && deg(a) > 0 && deg(b) > 0)
    return gcd_integer(F, a, b);
  if (F.kind() == FieldKind::Transcendental && !a.empty() && !b.empty() && deg(a) > 0 && deg(b) > 0)
    return gcd_prs(F, a, b);
  Coeffs x = a, y = b;
  trim(F, x);
  trim(F, y);
  while (!y.empty()) {
    Coeffs r = rem(F, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(F, x);
}

Coeffs xgcd(const Field& F, const Coeffs& a, const Coeffs& b, Coeffs& s, Coeffs& t) {
  Coeffs r0 = a, r1 = b;
  trim(F, r0);
  trim(F, r1);
  Coeffs s0 = constant(F, F.one()), s1, t0, t1 = constant(F, F.one());
  while (!r1.empty()) {
    Coeffs q, r;
    divrem(F, r0, r1, q, r);
    Coeffs s2 = sub(F, s0, mul(F, q, s1));
    Coeffs t2 = sub(F, t0, mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return {};
  }
  Elt li = F.inv(r0.back());
  s = scale(F, s0, li);
  t = scale(F, t0, li);
  return scale(F, r0, li);
}

Coeffs derivative(const Field& F, const Coeffs& a) {
  if (a.size() <= 1) return {};
  Coeffs out(a.size() - 1, F.zero());
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(F.from_int(static_cast<long long>(i)), a[i]);
  trim(F, out);
  return out;
}

Elt eval(const Field& F, const Coeffs& a, const Elt& x) {
  Elt acc = F.zero();
  for (int i = deg(a); i >= 0; --i) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

Coeffs compose(const Field& F, const Coeffs& a, const Coeffs& b) {
  Coeffs acc;
  for (int i = deg(a); i >= 0; --i) acc = add(F, mul(F, acc, b), constant(F, a[i]));
  return acc;
}

Coeffs pow(const Field& F, const Coeffs& a, unsigned e) {
  Coeffs result = constant(F, F.one()), base = a;
  while (e) {
    if (e & 1) result = mul(F, result, base);
    e >>= 1;
    if (e) base = mul(F, base, base);
  }
  return result;
}

Coeffs mulmod(const Field& F, const Coeffs& a, const Coeffs& b, const Coeffs& m) {
  return rem(F, mul(F, a, b), m);
}

Coeffs powmod(const Field& F, const Coeffs& a, const mpz_class& e, const Coeffs& m) {
  Coeffs result = rem(F, constant(F, F.one()), m), base = rem(F, a, m);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(F, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(F, result, base, m);
  }
  return result;
}

Coeffs lift(const Field& F, const Coeffs& a, int from_depth) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(F.lift(c, from_depth));
  trim(F, out);
  return out;
}

}  // namespace up

namespace {

// Polynomials in one extra variable; division only by nonzero constants.
struct PolyRing {
  const FieldPtr& F;
  std::vector<std::string> names;
  std::string var;
  Coeffs integer(const mpz_class& n) const { return up::constant(*F, F->from_mpz(n)); }
  Coeffs symbol(const std::string& s) const {
    if (s == var) return up::variable(*F);
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == s) return up::constant(*F, F->generator(static_cast<int>(i) + 1));
    throw ParseError("unknown symbol '" + s + "'");
  }
  Coeffs add(const Coeffs& a, const Coeffs& b) const { return up::add(*F, a, b); }
  Coeffs sub(const Coeffs& a, const Coeffs& b) const { return up::sub(*F, a, b); }
  Coeffs mul(const Coeffs& a, const Coeffs& b) const { return up::mul(*F, a, b); }
  Coeffs div(const Coeffs& a, const Coeffs& b) const {
    if (up::deg(b) != 0) throw ParseError("division by a non-constant polynomial");
    return up::scale(*F, a, F->inv(b[0]));
  }
  Coeffs neg(const Coeffs& a) const { return up::neg(*F, a); }
  Coeffs pow(const Coeffs& a, long e) const {
    if (e >= 0) return up::pow(*F, a, static_cast<unsigned>(e));
    if (up::deg(a) != 0) throw ParseError("negative power of a non-constant polynomial");
    return up::constant(*F, F->pow(a[0], static_cast<long long>(e)));
  }
};

}  // namespace

UPoly::UPoly(FieldPtr field, Coeffs coeffs, std::string var)
    : field_(std::move(field)), c_(std::move(coeffs)), var_(std::move(var)) {
  up::trim(*field_, c_);
}

UPoly UPoly::constant(const FieldElement& c, std::string var) {
  return UPoly(c.field(), up::constant(*c.field(), c.raw()), std::move(var));
}

UPoly UPoly::variable(const FieldPtr& field, std::string var) {
  return UPoly(field, up::variable(*field), std::move(var));
}

UPoly UPoly::parse(const FieldPtr& field, std::string_view text, std::string var) {
  auto names = field->generator_names();
  for (const auto& n : names)
    if (n == var) throw ParseError("polynomial variable '" + var + "' clashes with a generator");
  std::vector<std::string> symbols = names;
  symbols.push_back(var);
  auto expr = detail::parse_expression(text, symbols);
  PolyRing ring{field, names, var};
  return UPoly(field, detail::evaluate<Coeffs>(*expr, ring), var);
}

void UPoly::check(const UPoly& o) const {
  if (field_ != o.field_ && !same_tower(*field_, *o.field_))
    throw StructuralError("polynomials over different towers");
}

FieldElement UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return {field_, field_->zero()};
  return {field_, c_[i]};
}

FieldElement UPoly::leading() const {
  if (c_.empty()) return {field_, field_->zero()};
  return {field_, c_.back()};
}

bool UPoly::is_monic() const { return !c_.empty() && field_->is_one(c_.back()); }

UPoly UPoly::monic() const { return UPoly(field_, up::monic(*field_, c_), var_); }

UPoly UPoly::derivative() const { return UPoly(field_, up::derivative(*field_, c_), var_); }

FieldElement UPoly::operator()(const FieldElement& x) const {
  if (x.field() != field_ && !same_tower(*x.field(), *field_)) throw StructuralError("evaluation point in another tower");
  return {field_, up::eval(*field_, c_, x.raw())};
}

UPoly UPoly::operator-() const { return UPoly(field_, up::neg(*field_, c_), var_); }

UPoly operator+(const UPoly& a, const UPoly& b) {
  a.check(b);
  return UPoly(a.field_, up::add(*a.field_, a.c_, b.c_), a.var_);
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  a.check(b);
  return UPoly(a.field_, up::sub(*a.field_, a.c_, b.c_), a.var_);
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  a.check(b);
  return UPoly(a.field_, up::mul(*a.field_, a.c_, b.c_), a.var_);
}

UPoly operator*(const FieldElement& c, const UPoly& a) {
  if (c.field() != a.field_ && !same_tower(*c.field(), *a.field_)) throw StructuralError("scalar from another tower");
  return UPoly(a.field_, up::scale(*a.field_, a.c_, c.raw()), a.var_);
}

bool operator==(const UPoly& a, const UPoly& b) {
  a.check(b);
  return up::equal(*a.field_, a.c_, b.c_);
}

UPoly UPoly::pow(unsigned e) const { return UPoly(field_, up::pow(*field_, c_, e), var_); }

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& b) const {
  check(b);
  Coeffs q, r;
  up::divrem(*field_, c_, b.c_, q, r);
  return {UPoly(field_, q, var_), UPoly(field_, r, var_)};
}

}  // namespace valext
