#include "valext/field.hpp"

#include <algorithm>
#include <set>

#include "valext/errors.hpp"
#include "valext/factor.hpp"
#include "valext/upoly.hpp"

namespace valext {

namespace {

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero");
  // Extended Euclid on signed values.
  std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

void validate_name(const FieldPtr& parent, const std::string& name) {
  if (name.empty()) throw StructuralError("generator name must not be empty");
  for (const auto& n : parent->generator_names())
    if (n == name) throw StructuralError("generator name '" + name + "' already used in the tower");
}

bool is_atomic(const std::string& s) { return s.find(' ') == std::string::npos; }

}  // namespace

void set_separable(Field& f, bool s) { f.separable_ = s; }

Field::Field(FieldKind kind, FieldPtr parent, std::string name, Coeffs minpoly, std::uint64_t p)
    : kind_(kind),
      parent_(std::move(parent)),
      name_(std::move(name)),
      minpoly_(std::move(minpoly)),
      char_(p),
      depth_(parent_ ? parent_->depth() + 1 : 0) {}

FieldPtr Field::rationals() {
  static const FieldPtr q = std::make_shared<Field>(FieldKind::Rationals, nullptr, "", Coeffs{}, 0);
  return q;
}

FieldPtr Field::prime_field(std::uint64_t p) {
  if (!is_small_prime(p) || p >= (std::uint64_t{1} << 31))
    throw StructuralError("prime field needs a prime below 2^31, got " + std::to_string(p));
  return std::make_shared<Field>(FieldKind::PrimeField, nullptr, "", Coeffs{}, p);
}

FieldPtr Field::adjoin_transcendental(const FieldPtr& parent, std::string name) {
  validate_name(parent, name);
  return std::make_shared<Field>(FieldKind::Transcendental, parent, std::move(name), Coeffs{},
                                 parent->characteristic());
}

FieldPtr Field::adjoin_algebraic(const FieldPtr& parent, std::string name, Coeffs minpoly, bool verify) {
  validate_name(parent, name);
  up::trim(*parent, minpoly);
  if (up::deg(minpoly) < 2)
    throw DomainError("minimal polynomial of '" + name + "' must have degree at least 2");
  minpoly = up::monic(*parent, minpoly);
  bool separable = up::deg(up::gcd(*parent, minpoly, up::derivative(*parent, minpoly))) == 0;
  if (verify && !is_irreducible(parent, minpoly))
    throw DomainError("minimal polynomial " + up::print(*parent, minpoly, "y") + " of '" + name +
                      "' is reducible over " + parent->short_name());
  auto f = std::make_shared<Field>(FieldKind::Algebraic, parent, std::move(name), std::move(minpoly),
                                   parent->characteristic());
  set_separable(*f, separable);
  return f;
}

FieldPtr Field::level(int d) const {
  if (d < 0 || d > depth_) throw StructuralError("tower level " + std::to_string(d) + " out of range");
  if (d == depth_) return shared_from_this();
  return parent_->level(d);
}

std::vector<std::string> Field::generator_names() const {
  std::vector<std::string> out = parent_ ? parent_->generator_names() : std::vector<std::string>{};
  if (parent_) out.push_back(name_);
  return out;
}

int Field::transcendental_count() const {
  if (!parent_) return 0;
  return parent_->transcendental_count() + (kind_ == FieldKind::Transcendental ? 1 : 0);
}

bool Field::is_finite() const {
  if (kind_ == FieldKind::Rationals || kind_ == FieldKind::Transcendental) return false;
  if (kind_ == FieldKind::PrimeField) return true;
  return parent_->is_finite();
}

mpz_class Field::cardinality() const {
  if (!is_finite()) throw DomainError(short_name() + " is infinite");
  if (kind_ == FieldKind::PrimeField) return mpz_class(static_cast<unsigned long>(char_));
  mpz_class q = parent_->cardinality(), r = 1;
  for (int i = 0; i < degree(); ++i) r *= q;
  return r;
}

Elt Field::zero() const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Elt{mpq_class(0)};
    case FieldKind::PrimeField:
      return Elt{std::uint64_t{0}};
    case FieldKind::Transcendental:
      return Elt{RatFun{{}, {parent_->one()}}};
    case FieldKind::Algebraic:
      return Elt{Coeffs{}};
  }
  return {};
}

Elt Field::one() const { return from_int(1); }

Elt Field::from_int(long long n) const { return from_mpz(mpz_class(std::to_string(n))); }

Elt Field::from_mpz(const mpz_class& n) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Elt{mpq_class(n)};
    case FieldKind::PrimeField: {
      mpz_class r = n % static_cast<unsigned long>(char_);
      if (r < 0) r += static_cast<unsigned long>(char_);
      return Elt{static_cast<std::uint64_t>(r.get_ui())};
    }
    default:
      return lift(parent_->from_mpz(n), parent_->depth());
  }
}

Elt Field::from_rational(const mpq_class& q) const {
  if (kind_ == FieldKind::Rationals) {
    mpq_class c = q;
    c.canonicalize();
    return Elt{c};
  }
  if (kind_ == FieldKind::PrimeField) {
    Elt d = from_mpz(q.get_den());
    return mul(from_mpz(q.get_num()), inv(d));
  }
  return lift(parent_->from_rational(q), parent_->depth());
}

Elt Field::gen() const {
  if (kind_ == FieldKind::Transcendental)
    return Elt{RatFun{{parent_->zero(), parent_->one()}, {parent_->one()}}};
  if (kind_ == FieldKind::Algebraic) return Elt{Coeffs{parent_->zero(), parent_->one()}};
  throw StructuralError("prime field has no generator");
}

Elt Field::generator(int l) const {
  if (l < 1 || l > depth_) throw StructuralError("generator level " + std::to_string(l) + " out of range");
  return lift(level(l)->gen(), l);
}

Elt Field::lift(const Elt& x, int d) const {
  if (d == depth_) return x;
  if (d > depth_) throw StructuralError("cannot lift from a deeper level");
  Elt y = parent_->lift(x, d);
  if (kind_ == FieldKind::Transcendental) {
    if (parent_->is_zero(y)) return zero();
    return Elt{RatFun{{std::move(y)}, {parent_->one()}}};
  }
  if (parent_->is_zero(y)) return Elt{Coeffs{}};
  return Elt{Coeffs{std::move(y)}};
}

std::optional<Elt> Field::lower(const Elt& x, int d) const {
  if (d == depth_) return x;
  if (d > depth_) throw StructuralError("cannot lower to a deeper level");
  Elt y;
  if (kind_ == FieldKind::Transcendental) {
    const auto& r = as_ratfun(x);
    if (up::deg(r.den) != 0 || up::deg(r.num) > 0) return std::nullopt;
    y = r.num.empty() ? parent_->zero() : r.num[0];
  } else {
    const auto& c = as_poly(x);
    if (up::deg(c) > 0) return std::nullopt;
    y = c.empty() ? parent_->zero() : c[0];
  }
  return parent_->lower(y, d);
}

bool Field::is_zero(const Elt& a) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return sgn(as_q(a)) == 0;
    case FieldKind::PrimeField:
      return as_fp(a) == 0;
    case FieldKind::Transcendental:
      return as_ratfun(a).num.empty();
    case FieldKind::Algebraic:
      return as_poly(a).empty();
  }
  return false;
}

bool Field::is_one(const Elt& a) const { return equal(a, one()); }

bool Field::equal(const Elt& a, const Elt& b) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return as_q(a) == as_q(b);
    case FieldKind::PrimeField:
      return as_fp(a) == as_fp(b);
    case FieldKind::Transcendental:
      return up::equal(*parent_, as_ratfun(a).num, as_ratfun(b).num) &&
             up::equal(*parent_, as_ratfun(a).den, as_ratfun(b).den);
    case FieldKind::Algebraic:
      return up::equal(*parent_, as_poly(a), as_poly(b));
  }
  return false;
}

int Field::cmp(const Elt& a, const Elt& b) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return ::cmp(as_q(a), as_q(b)) < 0 ? -1 : (::cmp(as_q(a), as_q(b)) > 0 ? 1 : 0);
    case FieldKind::PrimeField:
      return as_fp(a) < as_fp(b) ? -1 : (as_fp(a) > as_fp(b) ? 1 : 0);
    case FieldKind::Transcendental: {
      int c = up::cmp(*parent_, as_ratfun(a).num, as_ratfun(b).num);
      return c != 0 ? c : up::cmp(*parent_, as_ratfun(a).den, as_ratfun(b).den);
    }
    case FieldKind::Algebraic: {
      const auto& x = as_poly(a);
      const auto& y = as_poly(b);
      Elt z = parent_->zero();
      for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        int c = parent_->cmp(i < x.size() ? x[i] : z, i < y.size() ? y[i] : z);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

Elt Field::make_ratfun(Coeffs num, Coeffs den) const {
  const Field& P = *parent_;
  up::trim(P, num);
  up::trim(P, den);
  if (den.empty()) throw DomainError("division by zero in " + short_name());
  if (num.empty()) return zero();
  if (up::deg(den) > 0) {
    Coeffs g = up::gcd(P, num, den);
    if (up::deg(g) > 0) {
      num = up::exact_quo(P, num, g);
      den = up::exact_quo(P, den, g);
    }
  }
  Elt lc = den.back();
  if (!P.is_one(lc)) {
    Elt li = P.inv(lc);
    num = up::scale(P, num, li);
    den = up::scale(P, den, li);
  }
  return Elt{RatFun{std::move(num), std::move(den)}};
}

Elt Field::make_algebraic(Coeffs c) const {
  up::trim(*parent_, c);
  if (up::deg(c) >= degree()) c = up::rem(*parent_, c, minpoly_);
  return Elt{std::move(c)};
}

Elt Field::add(const Elt& a, const Elt& b) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Elt{mpq_class(as_q(a) + as_q(b))};
    case FieldKind::PrimeField:
      return Elt{(as_fp(a) + as_fp(b)) % char_};
    case FieldKind::Transcendental: {
      const auto& x = as_ratfun(a);
      const auto& y = as_ratfun(b);
      if (x.num.empty()) return b;
      if (y.num.empty()) return a;
      const Field& P = *parent_;
      if (up::equal(P, x.den, y.den)) return make_ratfun(up::add(P, x.num, y.num), x.den);
      // Only the common factor of the denominators can cancel (Henrici).
      Coeffs g = up::deg(x.den) > 0 && up::deg(y.den) > 0 ? up::gcd(P, x.den, y.den) : up::constant(P, P.one());
      Coeffs bx = x.den, dy = y.den;
      if (up::deg(g) > 0) {
        bx = up::exact_quo(P, bx, g);
        dy = up::exact_quo(P, dy, g);
      }
      Coeffs num = up::add(P, up::mul(P, x.num, dy), up::mul(P, y.num, bx));
      up::trim(P, num);
      if (num.empty()) return zero();
      Coeffs den = up::mul(P, up::mul(P, bx, dy), g);
      if (up::deg(g) > 0) {
        Coeffs h = up::gcd(P, num, g);
        if (up::deg(h) > 0) {
          num = up::exact_quo(P, num, h);
          den = up::exact_quo(P, den, h);
        }
      }
      // den is a product of monic polynomials.
      return Elt{RatFun{std::move(num), std::move(den)}};
    }
    case FieldKind::Algebraic:
      return Elt{up::add(*parent_, as_poly(a), as_poly(b))};
  }
  return {};
}

Elt Field::neg(const Elt& a) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Elt{mpq_class(-as_q(a))};
    case FieldKind::PrimeField:
      return Elt{as_fp(a) == 0 ? 0 : char_ - as_fp(a)};
    case FieldKind::Transcendental:
      return Elt{RatFun{up::neg(*parent_, as_ratfun(a).num), as_ratfun(a).den}};
    case FieldKind::Algebraic:
      return Elt{up::neg(*parent_, as_poly(a))};
  }
  return {};
}

Elt Field::sub(const Elt& a, const Elt& b) const { return add(a, neg(b)); }

Elt Field::mul(const Elt& a, const Elt& b) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return Elt{mpq_class(as_q(a) * as_q(b))};
    case FieldKind::PrimeField:
      return Elt{(as_fp(a) * as_fp(b)) % char_};
    case FieldKind::Transcendental: {
      const auto& x = as_ratfun(a);
      const auto& y = as_ratfun(b);
      if (x.num.empty() || y.num.empty()) return zero();
      const Field& P = *parent_;
      // Cross cancellation keeps the operands small.
      Coeffs n1 = x.num, d1 = x.den, n2 = y.num, d2 = y.den;
      if (up::deg(d2) > 0) {
        Coeffs g = up::gcd(P, n1, d2);
        if (up::deg(g) > 0) {
          n1 = up::exact_quo(P, n1, g);
          d2 = up::exact_quo(P, d2, g);
        }
      }
      if (up::deg(d1) > 0) {
        Coeffs g = up::gcd(P, n2, d1);
        if (up::deg(g) > 0) {
          n2 = up::exact_quo(P, n2, g);
          d1 = up::exact_quo(P, d1, g);
        }
      }
      Coeffs num = up::mul(P, n1, n2), den = up::mul(P, d1, d2);
      Elt lc = den.back();
      if (!P.is_one(lc)) {
        Elt li = P.inv(lc);
        num = up::scale(P, num, li);
        den = up::scale(P, den, li);
      }
      return Elt{RatFun{std::move(num), std::move(den)}};
    }
    case FieldKind::Algebraic:
      return Elt{up::rem(*parent_, up::mul(*parent_, as_poly(a), as_poly(b)), minpoly_)};
  }
  return {};
}

Elt Field::inv(const Elt& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in " + short_name());
  switch (kind_) {
    case FieldKind::Rationals:
      return Elt{mpq_class(1 / as_q(a))};
    case FieldKind::PrimeField:
      return Elt{fp_inv(as_fp(a), char_)};
    case FieldKind::Transcendental: {
      const auto& x = as_ratfun(a);
      const Field& P = *parent_;
      Elt li = P.inv(x.num.back());
      return Elt{RatFun{up::scale(P, x.den, li), up::scale(P, x.num, li)}};
    }
    case FieldKind::Algebraic: {
      Coeffs s, t;
      Coeffs g = up::xgcd(*parent_, as_poly(a), minpoly_, s, t);
      if (up::deg(g) != 0) throw DomainError("element is a zero divisor: minimal polynomial is reducible");
      return Elt{up::rem(*parent_, s, minpoly_)};
    }
  }
  return {};
}

Elt Field::div(const Elt& a, const Elt& b) const { return mul(a, inv(b)); }

Elt Field::pow(const Elt& a, long long e) const { return pow(a, mpz_class(std::to_string(e))); }

Elt Field::pow(const Elt& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), mpz_class(-e));
  Elt result = one(), base = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

std::string Field::print(const Elt& a) const {
  switch (kind_) {
    case FieldKind::Rationals:
      return as_q(a).get_str();
    case FieldKind::PrimeField:
      return std::to_string(as_fp(a));
    case FieldKind::Transcendental: {
      const auto& r = as_ratfun(a);
      std::string n = up::print(*parent_, r.num, name_);
      if (up::deg(r.den) == 0) return n;
      return "(" + n + ")/(" + up::print(*parent_, r.den, name_) + ")";
    }
    case FieldKind::Algebraic:
      return up::print(*parent_, as_poly(a), name_);
  }
  return {};
}

std::string Field::short_name() const {
  if (kind_ == FieldKind::Rationals) return "Q";
  if (kind_ == FieldKind::PrimeField) return "F" + std::to_string(char_);
  return parent_->short_name() + "(" + name_ + ")";
}

bool same_tower(const Field& a, const Field& b) {
  if (&a == &b) return true;
  if (a.depth() != b.depth() || a.kind() != b.kind() || a.characteristic() != b.characteristic() ||
      a.name() != b.name())
    return false;
  if (a.depth() == 0) return true;
  if (!same_tower(*a.parent(), *b.parent())) return false;
  if (a.kind() == FieldKind::Algebraic) return up::equal(*a.parent(), a.minpoly(), b.minpoly());
  return true;
}

bool same_tower(const FieldPtr& a, const FieldPtr& b) { return same_tower(*a, *b); }

bool is_prefix(const FieldPtr& sub, const FieldPtr& tower) {
  return sub->depth() <= tower->depth() && same_tower(*sub, *tower->level(sub->depth()));
}

namespace up {

std::string print(const Field& F, const Coeffs& a, const std::string& var) {
  if (a.empty()) return "0";
  std::string out;
  for (int k = deg(a); k >= 0; --k) {
    const Elt& c = a[k];
    if (F.is_zero(c)) continue;
    // Names like a^(1/2) need parentheses before another exponent.
    const std::string base = var.find('^') == std::string::npos ? var : "(" + var + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : base + "^" + std::to_string(k));
    bool negative = false;
    std::string body;
    if (k > 0 && F.is_one(c)) {
      body = mono;
    } else if (k > 0 && F.is_one(F.neg(c))) {
      negative = true;
      body = mono;
    } else {
      std::string s = F.print(c);
      if (is_atomic(s)) {
        if (s[0] == '-') {
          negative = true;
          s = s.substr(1);
        }
      } else {
        s = "(" + s + ")";
      }
      body = mono.empty() ? s : s + "*" + mono;
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace up

}  // namespace valext
