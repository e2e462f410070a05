#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace valext {

struct Elt;
// Dense univariate coefficient list, lowest degree first, no trailing zeros.
using Coeffs = std::vector<Elt>;

// Reduced fraction of polynomials over the parent level; den is monic and coprime to num.
struct RatFun {
  Coeffs num;
  Coeffs den;
};

// Raw element of some level of a tower. Which alternative is active depends on the level:
// Q -> mpq_class, F_p -> residue, transcendental -> RatFun, algebraic -> Coeffs reduced mod the minpoly.
struct Elt {
  std::variant<mpq_class, std::uint64_t, Coeffs, RatFun> v;
};

enum class FieldKind { Rationals, PrimeField, Transcendental, Algebraic };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// One level of a finitely generated field tower over Q or F_p. Immutable and shared.
class Field : public std::enable_shared_from_this<Field> {
 public:
  static FieldPtr rationals();
  static FieldPtr prime_field(std::uint64_t p);
  static FieldPtr adjoin_transcendental(const FieldPtr& parent, std::string name);
  // minpoly must be monic of degree >= 2 over parent. With verify set, irreducibility is
  // certified by factoring (CapabilityError when that is not decidable) and a
  // reducible polynomial raises DomainError.
  static FieldPtr adjoin_algebraic(const FieldPtr& parent, std::string name, Coeffs minpoly,
                                   bool verify = true);

  FieldKind kind() const noexcept { return kind_; }
  const FieldPtr& parent() const noexcept { return parent_; }
  int depth() const noexcept { return depth_; }
  std::uint64_t characteristic() const noexcept { return char_; }
  const std::string& name() const noexcept { return name_; }
  const Coeffs& minpoly() const noexcept { return minpoly_; }
  int degree() const noexcept { return static_cast<int>(minpoly_.size()) - 1; }
  bool step_separable() const noexcept { return separable_; }

  // Prefix of the tower with the given depth (0 = prime field).
  FieldPtr level(int d) const;
  // Generator names of levels 1..depth.
  std::vector<std::string> generator_names() const;
  // Number of transcendental steps.
  int transcendental_count() const;
  bool is_finite() const;
  // Cardinality of a finite tower.
  mpz_class cardinality() const;

  Elt zero() const;
  Elt one() const;
  Elt from_int(long long n) const;
  Elt from_mpz(const mpz_class& n) const;
  Elt from_rational(const mpq_class& q) const;
  // Generator of this level.
  Elt gen() const;
  // Generator of level l (1..depth) as an element of this level.
  Elt generator(int l) const;
  // Embeds an element of the prefix of depth d.
  Elt lift(const Elt& x, int d) const;
  // The element as a member of the prefix of depth d, if it lies there.
  std::optional<Elt> lower(const Elt& x, int d) const;

  bool is_zero(const Elt& a) const;
  bool is_one(const Elt& a) const;
  bool equal(const Elt& a, const Elt& b) const;
  // Canonical total order used for deterministic output.
  int cmp(const Elt& a, const Elt& b) const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt inv(const Elt& a) const;  // DomainError on zero
  Elt div(const Elt& a, const Elt& b) const;
  Elt pow(const Elt& a, long long e) const;
  Elt pow(const Elt& a, const mpz_class& e) const;

  // Human readable element, parseable back by parse_element.
  std::string print(const Elt& a) const;
  // "Q(x)(i)" style summary.
  std::string short_name() const;

  // Raw accessors for code that walks the representation.
  static const mpq_class& as_q(const Elt& a) { return std::get<mpq_class>(a.v); }
  static std::uint64_t as_fp(const Elt& a) { return std::get<std::uint64_t>(a.v); }
  static const Coeffs& as_poly(const Elt& a) { return std::get<Coeffs>(a.v); }
  static const RatFun& as_ratfun(const Elt& a) { return std::get<RatFun>(a.v); }

  // Builds a normalized rational function element of a transcendental level.
  Elt make_ratfun(Coeffs num, Coeffs den) const;
  // Builds an element of an algebraic level from an arbitrary polynomial (reduced mod the minpoly).
  Elt make_algebraic(Coeffs c) const;

  Field(FieldKind kind, FieldPtr parent, std::string name, Coeffs minpoly, std::uint64_t p);

 private:
  FieldKind kind_;
  FieldPtr parent_;
  std::string name_;
  Coeffs minpoly_;
  std::uint64_t char_;
  int depth_;
  bool separable_ = true;

  friend void set_separable(Field& f, bool s);
};

// Same shape, names and minimal polynomials.
bool same_tower(const Field& a, const Field& b);
bool same_tower(const FieldPtr& a, const FieldPtr& b);

// Does `sub` occur as a prefix of `tower`?
bool is_prefix(const FieldPtr& sub, const FieldPtr& tower);

}  // namespace valext
