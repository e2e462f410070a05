#include "valext/polynomial.hpp"

#include "valext/errors.hpp"
#include "valext/expr.hpp"
#include "valext/factor.hpp"

namespace valext {

Polynomial::Polynomial(FieldPtr field, std::vector<std::string> vars)
    : field_(std::move(field)), vars_(std::move(vars)) {}

void Polynomial::add_term(const Exponent& e, const Elt& c) {
  if (e.size() != vars_.size()) throw StructuralError("exponent length does not match the variables");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!field_->is_zero(c)) terms_.emplace(e, c);
    return;
  }
  it->second = field_->add(it->second, c);
  if (field_->is_zero(it->second)) terms_.erase(it);
}

FieldElement Polynomial::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return {field_, it == terms_.end() ? field_->zero() : it->second};
}

Polynomial Polynomial::constant(const FieldElement& c, std::vector<std::string> vars) {
  Polynomial p(c.field(), std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c.raw());
  return p;
}

Polynomial Polynomial::variable(const FieldPtr& field, std::vector<std::string> vars, std::size_t i) {
  Polynomial p(field, std::move(vars));
  Exponent e(p.vars_.size(), 0);
  e.at(i) = 1;
  p.add_term(e, field->one());
  return p;
}

Polynomial Polynomial::from_upoly(const UPoly& u) {
  Polynomial p(u.field(), {u.var()});
  for (int i = 0; i <= u.degree(); ++i) p.add_term({static_cast<unsigned>(i)}, u.coeffs()[i]);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (auto k : e) s += static_cast<int>(k);
    d = std::max(d, s);
  }
  return d;
}

int Polynomial::univariate_index() const {
  int idx = -1;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (idx >= 0 && idx != static_cast<int>(i)) return -2;
      idx = static_cast<int>(i);
    }
  return idx;
}

UPoly Polynomial::to_upoly() const {
  int idx = univariate_index();
  if (idx == -2) throw UnsupportedError("multivariate polynomial where a univariate one is required");
  std::string var = idx >= 0 ? vars_[idx] : (vars_.empty() ? "y" : vars_[0]);
  Coeffs c;
  for (const auto& [e, coef] : terms_) {
    unsigned k = idx >= 0 ? e[idx] : 0;
    if (c.size() <= k) c.resize(k + 1, field_->zero());
    c[k] = coef;
  }
  return UPoly(field_, std::move(c), var);
}

void Polynomial::check(const Polynomial& o) const {
  if (vars_ != o.vars_) throw StructuralError("polynomials in different variables");
  if (field_ != o.field_ && !same_tower(*field_, *o.field_)) throw StructuralError("polynomials over different towers");
}

Polynomial Polynomial::operator-() const {
  Polynomial out(field_, vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, field_->neg(c));
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  Polynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  Polynomial out(a.field_, a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponent e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, a.field_->mul(ca, cb));
    }
  return out;
}

Polynomial operator*(const FieldElement& c, const Polynomial& a) {
  Polynomial out(a.field_, a.vars_);
  for (const auto& [e, x] : a.terms_) out.add_term(e, a.field_->mul(c.raw(), x));
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !a.field_->equal(ia->second, ib->second)) return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string body;
    if (!mono.empty() && field_->is_one(c)) {
      body = mono;
    } else if (!mono.empty() && field_->is_one(field_->neg(c))) {
      negative = true;
      body = mono;
    } else {
      std::string s = field_->print(c);
      if (s.find(' ') == std::string::npos) {
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

namespace {

struct SparseRing {
  const FieldPtr& F;
  const std::vector<std::string>& vars;
  std::vector<std::string> names;
  Polynomial integer(const mpz_class& n) const { return Polynomial::constant({F, F->from_mpz(n)}, vars); }
  Polynomial symbol(const std::string& s) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == s) return Polynomial::variable(F, vars, i);
    return Polynomial::constant(FieldElement::generator(F, s), vars);
  }
  Polynomial add(const Polynomial& a, const Polynomial& b) const { return a + b; }
  Polynomial sub(const Polynomial& a, const Polynomial& b) const { return a - b; }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return a * b; }
  Polynomial div(const Polynomial& a, const Polynomial& b) const {
    if (b.is_zero()) throw ParseError("division by zero");
    if (b.total_degree() != 0) throw ParseError("division by a non-constant polynomial");
    return FieldElement(F, F->inv(b.terms().begin()->second)) * a;
  }
  Polynomial neg(const Polynomial& a) const { return -a; }
  Polynomial pow(const Polynomial& a, long e) const {
    if (e < 0) {
      if (a.total_degree() != 0) throw ParseError("negative power of a non-constant polynomial");
      return Polynomial::constant(FieldElement(F, F->pow(a.terms().begin()->second, static_cast<long long>(e))), vars);
    }
    Polynomial r = Polynomial::constant(FieldElement(F, F->one()), vars);
    for (long i = 0; i < e; ++i) r = r * a;
    return r;
  }
};

}  // namespace

Polynomial Polynomial::parse(const FieldPtr& field, std::vector<std::string> vars, std::string_view text) {
  auto names = field->generator_names();
  for (const auto& v : vars)
    for (const auto& n : names)
      if (v == n) throw ParseError("variable '" + v + "' clashes with a generator");
  std::vector<std::string> symbols = names;
  symbols.insert(symbols.end(), vars.begin(), vars.end());
  auto expr = detail::parse_expression(text, symbols);
  SparseRing ring{field, vars, names};
  return detail::evaluate<Polynomial>(*expr, ring);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.univariate_index() == -2 || b.univariate_index() == -2)
    throw UnsupportedError("multivariate gcd is not supported");
  int ia = a.univariate_index(), ib = b.univariate_index();
  if (ia >= 0 && ib >= 0 && ia != ib) throw UnsupportedError("gcd of polynomials in different variables");
  int idx = ia >= 0 ? ia : ib;
  UPoly g = gcd(a.to_upoly(), b.to_upoly());
  Polynomial out(a.field(), a.vars());
  for (int k = 0; k <= g.degree(); ++k) {
    Polynomial::Exponent e(a.vars().size(), 0);
    if (idx >= 0) e[idx] = static_cast<unsigned>(k);
    out.add_term(e, g.coeffs()[k]);
  }
  return out;
}

}  // namespace valext
