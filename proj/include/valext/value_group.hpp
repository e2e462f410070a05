#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace valext {

// The ordered group (1/p^N) Z^n with lexicographic order, first coordinate most significant.
// Multiplicative notation: the group law is coordinatewise addition of the stored vectors.
class ValueGroup {
 public:
  static constexpr int kDefaultMaxRank = 3;

  // char_exponent is 1 or a prime; N = denom_exponent. Throws StructuralError on bad parameters.
  explicit ValueGroup(int rank, std::uint64_t char_exponent = 1, int denom_exponent = 0,
                      int max_rank = kDefaultMaxRank);

  int rank() const noexcept { return rank_; }
  std::uint64_t char_exponent() const noexcept { return p_; }
  int denom_exponent() const noexcept { return n_; }
  // p^N; coordinates are stored as numerators over this.
  std::int64_t denominator() const noexcept { return denom_; }

  // (1/p^N)Z^n sits inside (1/q^M)Z^n iff ranks agree and p^N divides q^M.
  bool embeds_in(const ValueGroup& sup) const noexcept;

  // "Z^2 lex" or "(1/2)Z lex".
  std::string to_string() const;

  friend bool operator==(const ValueGroup& a, const ValueGroup& b) noexcept {
    return a.rank_ == b.rank_ && a.denom_ == b.denom_;
  }

 private:
  int rank_;
  std::uint64_t p_;
  int n_;
  std::int64_t denom_;
};

// An element of Gamma together with the absorbing element Zero.
class ValueWithZero {
 public:
  static ValueWithZero zero(const ValueGroup& g);
  // Coordinates given as integers (the element of Z^n inside the group).
  static ValueWithZero from_integers(const ValueGroup& g, const std::vector<std::int64_t>& coords);
  // Coordinates given as numerators over g.denominator().
  static ValueWithZero from_numerators(const ValueGroup& g, std::vector<std::int64_t> nums);
  // Unit element (all coordinates zero).
  static ValueWithZero one(const ValueGroup& g);

  bool is_zero() const noexcept { return zero_; }
  bool is_one() const noexcept;
  const ValueGroup& group() const noexcept { return group_; }
  const std::vector<std::int64_t>& numerators() const noexcept { return nums_; }

  // Same element viewed in a larger group. Throws StructuralError when the groups do not embed.
  ValueWithZero embed(const ValueGroup& sup) const;
  // True when every coordinate is an integer, i.e. the element lies in Z^n.
  bool is_integral() const noexcept;

  // "0" for Zero, otherwise "(1, -1/2)".
  std::string to_string() const;
  static ValueWithZero parse(std::string_view text, const ValueGroup& g);

  friend bool operator==(const ValueWithZero& a, const ValueWithZero& b) noexcept {
    return a.group_ == b.group_ && a.zero_ == b.zero_ && a.nums_ == b.nums_;
  }

 private:
  ValueWithZero(ValueGroup g, bool zero, std::vector<std::int64_t> nums)
      : group_(g), zero_(zero), nums_(std::move(nums)) {}

  ValueGroup group_;
  bool zero_;
  std::vector<std::int64_t> nums_;
};

// Lexicographic order on stored coordinates, Zero strictly below everything.
// Throws StructuralError when the groups differ.
std::strong_ordering compare(const ValueWithZero& a, const ValueWithZero& b);
ValueWithZero mul(const ValueWithZero& a, const ValueWithZero& b);
// Throws DomainError on Zero.
ValueWithZero inv(const ValueWithZero& a);
ValueWithZero div(const ValueWithZero& a, const ValueWithZero& b);

// Is sup/sub a p-torsion group? Throws StructuralError when sub does not embed in sup.
bool is_p_torsion_quotient(const ValueGroup& sub, const ValueGroup& sup, std::uint64_t p);

// Additive conventions used by valuations and norms: Zero plays +infinity and sums are group products.
std::strong_ordering additive_compare(const ValueWithZero& a, const ValueWithZero& b);
ValueWithZero additive_min(const ValueWithZero& a, const ValueWithZero& b);
// Coordinate negation, mapping an additive value to the multiplicative absolute value and back.
ValueWithZero negate(const ValueWithZero& a);

}  // namespace valext
