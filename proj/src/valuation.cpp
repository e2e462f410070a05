#include "valext/valuation.hpp"

#include <cctype>

#include "valext/errors.hpp"
#include "valext/tower.hpp"

namespace valext {

namespace {

ValueGroup default_group(const FieldPtr& F, std::size_t n) {
  std::uint64_t p = F->characteristic();
  return ValueGroup(static_cast<int>(n), p == 0 ? 1 : p, 0);
}

FieldPtr adjoin_vars(FieldPtr F, const std::vector<std::string>& vars) {
  for (const auto& v : vars) F = Field::adjoin_transcendental(F, v);
  return F;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

MonomialValuation::MonomialValuation(FieldPtr coefficient_field, std::vector<std::string> vars)
    : MonomialValuation(coefficient_field, vars, default_group(coefficient_field, vars.size()), 1) {}

MonomialValuation::MonomialValuation(FieldPtr coefficient_field, std::vector<std::string> vars, ValueGroup group,
                                     std::int64_t weight)
    : F_(std::move(coefficient_field)), vars_(std::move(vars)), group_(group), weight_(weight) {
  if (vars_.empty()) throw StructuralError("a monomial valuation needs at least one variable");
  if (group_.rank() != static_cast<int>(vars_.size()))
    throw StructuralError("value group rank does not match the number of variables");
  if (weight_ <= 0) throw StructuralError("variable weight must be positive");
  K_ = adjoin_vars(F_, vars_);
}

MonomialValuation::Initial MonomialValuation::initial_poly(int level, const Coeffs& p) const {
  Initial best;
  for (int k = 0; k <= up::deg(p); ++k) {
    Initial c = initial(level - 1, p[k]);
    if (c.zero) continue;
    c.v.push_back(k);
    if (best.zero || c.v < best.v) best = std::move(c);
  }
  return best;
}

MonomialValuation::Initial MonomialValuation::initial(int level, const Elt& z) const {
  if (level == 0) {
    Initial out;
    out.zero = F_->is_zero(z);
    out.coeff = z;
    return out;
  }
  const auto& r = Field::as_ratfun(z);
  if (r.num.empty()) return {};
  Initial n = initial_poly(level, r.num);
  if (up::deg(r.den) == 0) return n;
  Initial d = initial_poly(level, r.den);
  for (std::size_t i = 0; i < n.v.size(); ++i) n.v[i] -= d.v[i];
  n.coeff = F_->div(n.coeff, d.coeff);
  return n;
}

ValueWithZero MonomialValuation::value(const FieldElement& z) const {
  if (!same_tower(*z.field(), *K_))
    throw StructuralError("element of " + z.field()->short_name() + " is not in " + K_->short_name());
  Initial in = initial(rank(), z.raw());
  if (in.zero) return ValueWithZero::zero(group_);
  for (auto& c : in.v) c *= weight_;
  return ValueWithZero::from_numerators(group_, std::move(in.v));
}

FieldElement MonomialValuation::residue(const FieldElement& z) const {
  if (!same_tower(*z.field(), *K_)) throw StructuralError("element is not in the function field");
  Initial in = initial(rank(), z.raw());
  if (in.zero) return {F_, F_->zero()};
  std::vector<std::int64_t> zero(in.v.size(), 0);
  if (in.v < zero) throw DomainError("residue of an element of negative value " + value(z).to_string());
  if (in.v > zero) return {F_, F_->zero()};
  return {F_, in.coeff};
}

bool MonomialValuation::in_ring(const FieldElement& z) const {
  return additive_compare(value(z), ValueWithZero::one(group_)) >= 0;
}

bool MonomialValuation::in_maximal_ideal(const FieldElement& z) const {
  return additive_compare(value(z), ValueWithZero::one(group_)) > 0;
}

bool MonomialValuation::is_unit(const FieldElement& z) const { return value(z).is_one(); }

FieldElement MonomialValuation::variable(std::size_t i) const {
  return FieldElement::generator(K_, F_->depth() + 1 + static_cast<int>(i));
}

FieldElement MonomialValuation::constant(const FieldElement& c) const {
  if (!same_tower(*c.field(), *F_)) throw StructuralError("constant is not in the coefficient field");
  return {K_, K_->lift(c.raw(), F_->depth())};
}

FieldElement MonomialValuation::monomial(const std::vector<std::int64_t>& exponents) const {
  if (exponents.size() != vars_.size()) throw StructuralError("monomial needs one exponent per variable");
  FieldElement out = FieldElement::from_int(K_, 1);
  for (std::size_t i = 0; i < exponents.size(); ++i) out *= variable(i).pow(exponents[i]);
  return out;
}

std::optional<FieldElement> MonomialValuation::monomial_with_value(const ValueWithZero& v) const {
  if (v.is_zero() || !(v.group() == group_)) return std::nullopt;
  std::vector<std::int64_t> e;
  for (auto n : v.numerators()) {
    if (n % weight_ != 0) return std::nullopt;
    e.push_back(n / weight_);
  }
  return monomial(e);
}

std::vector<PrimeIdeal> MonomialValuation::prime_chain() const {
  std::vector<PrimeIdeal> chain;
  const int n = rank();
  for (int j = 0; j <= n; ++j) {
    PrimeIdeal q;
    q.height = j;
    q.surviving.assign(vars_.begin() + j, vars_.end());
    if (j == 0) {
      q.residue_field = K_;
    } else {
      FieldPtr kappa = adjoin_vars(F_, q.surviving);
      std::vector<std::string> coarse_vars(vars_.begin(), vars_.begin() + j);
      ValueGroup g(j, group_.char_exponent(), group_.denom_exponent());
      q.coarse = std::make_shared<MonomialValuation>(kappa, coarse_vars, g, weight_);
      q.residue_field = kappa;
    }
    chain.push_back(std::move(q));
  }
  return chain;
}

bool PrimeIdeal::contains(const FieldElement& z) const {
  if (!coarse) return z.is_zero();
  FieldElement w = FieldMap::by_names(z.field(), coarse->function_field())(z);
  return coarse->in_maximal_ideal(w);
}

bool PrimeIdeal::in_localization(const FieldElement& z) const {
  if (!coarse) return true;
  FieldElement w = FieldMap::by_names(z.field(), coarse->function_field())(z);
  return coarse->in_ring(w);
}

FieldElement PrimeIdeal::residue(const FieldElement& z) const {
  if (!coarse) return FieldMap::by_names(z.field(), residue_field)(z);
  FieldElement w = FieldMap::by_names(z.field(), coarse->function_field())(z);
  return coarse->residue(w);
}

std::string MonomialValuation::describe() const {
  std::string out = "field: " + print_tower(F_) + "; vars: ";
  for (std::size_t i = 0; i < vars_.size(); ++i) out += (i ? "," : "") + vars_[i];
  return out + "; order: lex";
}

MonomialValuation parse_valuation(std::string_view text) {
  std::string tower;
  std::vector<std::string> vars;
  bool in_field = false, seen_order = false;
  std::string item;
  std::vector<std::string> items;
  for (char c : text) {
    if (c == ';') {
      items.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  items.push_back(item);
  for (const auto& raw : items) {
    std::string s = trim(raw);
    if (s.empty()) continue;
    if (s.compare(0, 6, "field:") == 0) {
      tower = trim(s.substr(6));
      in_field = true;
    } else if (s.compare(0, 5, "vars:") == 0) {
      in_field = false;
      std::string list = s.substr(5);
      std::string cur;
      for (char c : list + ",") {
        if (c == ',') {
          std::string v = trim(cur);
          if (v.empty()) throw ParseError("empty variable name");
          vars.push_back(v);
          cur.clear();
        } else {
          cur += c;
        }
      }
    } else if (s.compare(0, 6, "order:") == 0) {
      in_field = false;
      if (trim(s.substr(6)) != "lex") throw ParseError("only lex order is supported");
      seen_order = true;
    } else if (in_field) {
      tower += "; " + s;
    } else {
      throw ParseError("unknown valuation item '" + s + "'");
    }
  }
  if (tower.empty() || vars.empty()) throw ParseError("valuation needs 'field:' and 'vars:'");
  (void)seen_order;
  return MonomialValuation(parse_tower(tower), vars);
}

}  // namespace valext
