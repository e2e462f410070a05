#include "valext/value_group.hpp"

#include <numeric>
#include <sstream>

#include "valext/errors.hpp"

namespace valext {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string coord_string(std::int64_t num, std::int64_t den) {
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

void require_same(const ValueWithZero& a, const ValueWithZero& b) {
  if (!(a.group() == b.group()))
    throw StructuralError("values from different groups: " + a.group().to_string() + " vs " +
                          b.group().to_string());
}

}  // namespace

ValueGroup::ValueGroup(int rank, std::uint64_t char_exponent, int denom_exponent, int max_rank)
    : rank_(rank), p_(char_exponent), n_(denom_exponent), denom_(1) {
  if (rank < 1 || rank > max_rank)
    throw StructuralError("value group rank " + std::to_string(rank) + " outside [1, " +
                          std::to_string(max_rank) + "]");
  if (char_exponent != 1 && !is_prime(char_exponent))
    throw StructuralError("characteristic exponent must be 1 or a prime");
  if (denom_exponent < 0) throw StructuralError("negative denominator exponent");
  if (char_exponent == 1 && denom_exponent != 0)
    throw StructuralError("p-power denominators need a prime characteristic exponent");
  for (int i = 0; i < denom_exponent; ++i) {
    if (denom_ > (std::int64_t{1} << 40) / static_cast<std::int64_t>(p_))
      throw StructuralError("value group denominator too large");
    denom_ *= static_cast<std::int64_t>(p_);
  }
}

bool ValueGroup::embeds_in(const ValueGroup& sup) const noexcept {
  return rank_ == sup.rank_ && sup.denom_ % denom_ == 0;
}

std::string ValueGroup::to_string() const {
  std::ostringstream os;
  if (denom_ != 1) os << "(1/" << denom_ << ")";
  os << "Z";
  if (rank_ > 1) os << "^" << rank_;
  os << " lex";
  return os.str();
}

ValueWithZero ValueWithZero::zero(const ValueGroup& g) { return ValueWithZero(g, true, {}); }

ValueWithZero ValueWithZero::one(const ValueGroup& g) {
  return ValueWithZero(g, false, std::vector<std::int64_t>(g.rank(), 0));
}

ValueWithZero ValueWithZero::from_integers(const ValueGroup& g, const std::vector<std::int64_t>& coords) {
  std::vector<std::int64_t> nums(coords);
  for (auto& c : nums) c *= g.denominator();
  return from_numerators(g, std::move(nums));
}

ValueWithZero ValueWithZero::from_numerators(const ValueGroup& g, std::vector<std::int64_t> nums) {
  if (static_cast<int>(nums.size()) != g.rank())
    throw StructuralError("coordinate count " + std::to_string(nums.size()) + " does not match rank " +
                          std::to_string(g.rank()));
  return ValueWithZero(g, false, std::move(nums));
}

bool ValueWithZero::is_one() const noexcept {
  if (zero_) return false;
  for (auto c : nums_)
    if (c != 0) return false;
  return true;
}

bool ValueWithZero::is_integral() const noexcept {
  if (zero_) return true;
  for (auto c : nums_)
    if (c % group_.denominator() != 0) return false;
  return true;
}

ValueWithZero ValueWithZero::embed(const ValueGroup& sup) const {
  if (!group_.embeds_in(sup))
    throw StructuralError(group_.to_string() + " does not embed in " + sup.to_string());
  if (zero_) return zero(sup);
  std::int64_t scale = sup.denominator() / group_.denominator();
  std::vector<std::int64_t> nums(nums_);
  for (auto& c : nums) c *= scale;
  return ValueWithZero(sup, false, std::move(nums));
}

std::string ValueWithZero::to_string() const {
  if (zero_) return "0";
  std::string out = "(";
  for (std::size_t i = 0; i < nums_.size(); ++i) {
    if (i) out += ", ";
    out += coord_string(nums_[i], group_.denominator());
  }
  return out + ")";
}

ValueWithZero ValueWithZero::parse(std::string_view text, const ValueGroup& g) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s == "0") return zero(g);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("value must be 0 or a parenthesised coordinate list: '" + std::string(text) + "'");
  std::vector<std::int64_t> nums;
  std::stringstream items(s.substr(1, s.size() - 2));
  std::string item;
  while (std::getline(items, item, ',')) {
    std::int64_t num = 0, den = 1;
    try {
      auto slash = item.find('/');
      num = std::stoll(item.substr(0, slash));
      if (slash != std::string::npos) den = std::stoll(item.substr(slash + 1));
    } catch (const std::exception&) {
      throw ParseError("bad coordinate '" + item + "'");
    }
    if (den <= 0 || g.denominator() % den != 0)
      throw ParseError("coordinate " + item + " is not in " + g.to_string());
    nums.push_back(num * (g.denominator() / den));
  }
  if (static_cast<int>(nums.size()) != g.rank()) throw ParseError("wrong number of coordinates in " + s);
  return from_numerators(g, std::move(nums));
}

std::strong_ordering compare(const ValueWithZero& a, const ValueWithZero& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
    return a.is_zero() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.numerators() <=> b.numerators();
}

ValueWithZero mul(const ValueWithZero& a, const ValueWithZero& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return ValueWithZero::zero(a.group());
  std::vector<std::int64_t> nums(a.numerators());
  for (std::size_t i = 0; i < nums.size(); ++i) nums[i] += b.numerators()[i];
  return ValueWithZero::from_numerators(a.group(), std::move(nums));
}

ValueWithZero inv(const ValueWithZero& a) {
  if (a.is_zero()) throw DomainError("inverse of Zero");
  return negate(a);
}

ValueWithZero div(const ValueWithZero& a, const ValueWithZero& b) { return mul(a, inv(b)); }

ValueWithZero negate(const ValueWithZero& a) {
  if (a.is_zero()) return a;
  std::vector<std::int64_t> nums(a.numerators());
  for (auto& c : nums) c = -c;
  return ValueWithZero::from_numerators(a.group(), std::move(nums));
}

bool is_p_torsion_quotient(const ValueGroup& sub, const ValueGroup& sup, std::uint64_t p) {
  if (!sub.embeds_in(sup))
    throw StructuralError(sub.to_string() + " does not embed in " + sup.to_string());
  // The quotient is cyclic of order sup.denominator()/sub.denominator() in each coordinate.
  std::int64_t index = sup.denominator() / sub.denominator();
  while (index > 1) {
    if (p < 2 || index % static_cast<std::int64_t>(p) != 0) return false;
    index /= static_cast<std::int64_t>(p);
  }
  return true;
}

std::strong_ordering additive_compare(const ValueWithZero& a, const ValueWithZero& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
    return a.is_zero() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.numerators() <=> b.numerators();
}

ValueWithZero additive_min(const ValueWithZero& a, const ValueWithZero& b) {
  return additive_compare(a, b) <= 0 ? a : b;
}

}  // namespace valext
