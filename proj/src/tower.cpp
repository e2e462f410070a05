#include "valext/tower.hpp"

#include <cctype>
#include <sstream>

#include "valext/errors.hpp"
#include "valext/upoly.hpp"

namespace valext {

namespace {

std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

bool valid_name(const std::string& n) {
  if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  std::size_t i = 1;
  while (i < n.size() && (std::isalnum(static_cast<unsigned char>(n[i])) || n[i] == '_' || n[i] == '\'')) ++i;
  if (i == n.size()) return n != "y";
  // Optional root suffix ^(1/q).
  std::string rest = n.substr(i);
  if (rest.size() < 6 || rest.compare(0, 4, "^(1/") != 0 || rest.back() != ')') return false;
  for (std::size_t j = 4; j + 1 < rest.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(rest[j]))) return false;
  return true;
}

FieldPtr parse_base(const std::string& item) {
  auto eq = item.find('=');
  if (eq == std::string::npos || strip(item.substr(0, eq)) != "base")
    throw ParseError("tower description must start with base=Q or base=Fp");
  std::string b = strip(item.substr(eq + 1));
  if (b == "Q") return Field::rationals();
  if (b.size() >= 2 && b[0] == 'F') {
    for (std::size_t i = 1; i < b.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(b[i]))) throw ParseError("bad base field '" + b + "'");
    if (b.size() > 10) throw ParseError("base prime too large");
    try {
      return Field::prime_field(std::stoull(b.substr(1)));
    } catch (const StructuralError& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("bad base field '" + b + "'");
}

FieldPtr add_step(const FieldPtr& F, const std::string& item) {
  std::string s = strip(item);
  if (s.compare(0, 4, "gen ") != 0) throw ParseError("tower step must look like 'gen NAME: ...': '" + s + "'");
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("missing ':' in tower step '" + s + "'");
  std::string name = strip(s.substr(4, colon - 4));
  if (!valid_name(name)) throw ParseError("invalid generator name '" + name + "'");
  std::string body = strip(s.substr(colon + 1));
  try {
    if (body == "transcendental") return Field::adjoin_transcendental(F, name);
    if (body.compare(0, 9, "algebraic") == 0) {
      std::string poly = strip(body.substr(9));
      if (poly.empty()) throw ParseError("algebraic step '" + name + "' needs a minimal polynomial");
      UPoly m = UPoly::parse(F, poly, "y");
      return Field::adjoin_algebraic(F, name, m.coeffs());
    }
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
  throw ParseError("step kind must be 'transcendental' or 'algebraic <poly>': '" + body + "'");
}

FieldPtr add_steps(FieldPtr F, const std::vector<std::string>& items, std::size_t from, int max_trans) {
  for (std::size_t i = from; i < items.size(); ++i) {
    if (strip(items[i]).empty()) continue;
    F = add_step(F, items[i]);
    if (F->transcendental_count() > max_trans)
      throw ParseError("transcendence degree exceeds the bound " + std::to_string(max_trans));
  }
  return F;
}

}  // namespace

FieldPtr parse_tower(std::string_view text, int max_transcendence) {
  auto items = split(text, ';');
  return add_steps(parse_base(items[0]), items, 1, max_transcendence);
}

FieldPtr extend_tower(const FieldPtr& base, std::string_view steps, int max_transcendence) {
  return add_steps(base, split(steps, ';'), 0, max_transcendence);
}

std::string print_tower(const FieldPtr& field) {
  std::string out = "base=" + field->level(0)->short_name();
  for (int l = 1; l <= field->depth(); ++l) {
    const auto& L = *field->level(l);
    out += "; gen " + L.name() + ": ";
    if (L.kind() == FieldKind::Transcendental)
      out += "transcendental";
    else
      out += "algebraic " + up::print(*L.parent(), L.minpoly(), "y");
  }
  return out;
}

bool is_separable_step(const FieldPtr& field) {
  return field->kind() != FieldKind::Algebraic || field->step_separable();
}

bool is_separable_over(const FieldPtr& field, int prefix_depth) {
  for (int l = prefix_depth + 1; l <= field->depth(); ++l)
    if (!is_separable_step(field->level(l))) return false;
  return true;
}

std::optional<long> degree_over(const FieldPtr& field, int prefix_depth) {
  long d = 1;
  for (int l = prefix_depth + 1; l <= field->depth(); ++l) {
    const auto& L = *field->level(l);
    if (L.kind() != FieldKind::Algebraic) return std::nullopt;
    d *= L.degree();
  }
  return d;
}

bool is_algebraic_over(const FieldPtr& field, int prefix_depth) { return degree_over(field, prefix_depth).has_value(); }

bool in_generated_subfield(const FieldPtr& field, const std::vector<Elt>& gens, const Elt& z) {
  for (const auto& g : gens)
    if (field->equal(g, z)) return true;
  int d = 0;
  while (d < field->depth()) {
    Elt g = field->generator(d + 1);
    bool found = false;
    for (const auto& h : gens)
      if (field->equal(g, h)) found = true;
    if (!found) break;
    ++d;
  }
  return field->lower(z, d).has_value();
}

bool is_radicial(const FieldMap& embedding, std::uint64_t p, int exponent_bound) {
  const FieldPtr& sup = embedding.dst();
  const std::uint64_t ch = sup->characteristic();
  if (ch != 0 && p != ch) throw DomainError("exponent " + std::to_string(p) + " is not the characteristic");
  const bool prefix = embedding.is_prefix_inclusion();
  auto contains = [&](const Elt& z) {
    if (prefix) return sup->lower(z, embedding.src()->depth()).has_value();
    return in_generated_subfield(sup, embedding.images(), z);
  };
  for (int l = 1; l <= sup->depth(); ++l) {
    Elt z = sup->generator(l);
    bool found = false;
    for (int m = 0; m <= (ch == 0 ? 0 : exponent_bound) && !found; ++m) {
      if (contains(z)) found = true;
      z = sup->pow(z, static_cast<long long>(p));
    }
    if (!found) return false;
  }
  return true;
}

bool is_radicial_over(const FieldPtr& sup, const std::vector<Elt>& gens, std::uint64_t p, int exponent_bound) {
  const std::uint64_t ch = sup->characteristic();
  if (ch != 0 && p != ch) throw DomainError("exponent " + std::to_string(p) + " is not the characteristic");
  for (int l = 1; l <= sup->depth(); ++l) {
    Elt z = sup->generator(l);
    bool found = false;
    for (int m = 0; m <= (ch == 0 ? 0 : exponent_bound) && !found; ++m) {
      if (in_generated_subfield(sup, gens, z)) found = true;
      z = sup->pow(z, static_cast<long long>(p));
    }
    if (!found) return false;
  }
  return true;
}

bool is_radicial(const FieldPtr& sub, const FieldPtr& sup, std::uint64_t p, int exponent_bound) {
  return is_radicial(FieldMap::inclusion(sub, sup), p, exponent_bound);
}

std::string root_name(const std::string& name, std::int64_t q) { return name + "^(1/" + std::to_string(q) + ")"; }

ClosureResult perfect_closure_truncated(const FieldPtr& field, std::uint64_t p, int N) {
  if (field->characteristic() == 0) throw DomainError("perfect closure needs positive characteristic");
  if (p != field->characteristic()) throw DomainError("exponent does not match the characteristic");
  if (N < 0) throw DomainError("negative truncation");
  if (N == 0 || field->is_finite()) return {field, FieldMap::identity(field)};
  std::int64_t q = 1;
  for (int i = 0; i < N; ++i) q *= static_cast<std::int64_t>(p);
  FieldPtr copy = field->level(0);
  for (int l = 1; l <= field->depth(); ++l) {
    const auto& L = *field->level(l);
    // The renamed tower has the same raw representation, so minimal polynomials carry over.
    if (L.kind() == FieldKind::Transcendental)
      copy = Field::adjoin_transcendental(copy, root_name(L.name(), q));
    else
      copy = Field::adjoin_algebraic(copy, root_name(L.name(), q), L.minpoly(), false);
  }
  std::vector<Elt> images;
  for (int l = 1; l <= field->depth(); ++l) images.push_back(copy->pow(copy->generator(l), static_cast<long long>(q)));
  return {copy, FieldMap(field, copy, std::move(images))};
}

std::optional<ConstantSplit> split_constants(const FieldPtr& field) {
  FieldPtr C = field->level(0);
  std::vector<std::string> trans;
  auto rebuild = [&]() {
    FieldPtr R = C;
    for (const auto& t : trans) R = Field::adjoin_transcendental(R, t);
    return R;
  };
  for (int l = 1; l <= field->depth(); ++l) {
    const auto& L = *field->level(l);
    if (L.kind() == FieldKind::Transcendental) {
      trans.push_back(L.name());
      continue;
    }
    FieldPtr R = rebuild();
    FieldMap to = FieldMap::by_names(field->level(l - 1), R);
    Coeffs lowered;
    for (const auto& c : L.minpoly()) {
      auto x = R->lower(to.apply(c), C->depth());
      if (!x) return std::nullopt;
      lowered.push_back(std::move(*x));
    }
    C = Field::adjoin_algebraic(C, L.name(), std::move(lowered), false);
  }
  FieldPtr R = rebuild();
  return ConstantSplit{C, R, FieldMap::by_names(field, R), FieldMap::by_names(R, field)};
}

bool is_isomorphism_pair(const FieldMap& f, const FieldMap& g) {
  if (!same_tower(*f.dst(), *g.src()) || !same_tower(*g.dst(), *f.src())) return false;
  try {
    if (!f.well_defined() || !g.well_defined()) return false;
    for (int l = 1; l <= f.src()->depth(); ++l)
      if (!f.src()->equal(g.apply(f.images()[l - 1]), f.src()->generator(l))) return false;
    for (int l = 1; l <= g.src()->depth(); ++l)
      if (!g.src()->equal(f.apply(g.images()[l - 1]), g.src()->generator(l))) return false;
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

}  // namespace valext
