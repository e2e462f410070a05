#include "valext/free_norms.hpp"

#include <algorithm>
#include <functional>

#include "valext/errors.hpp"
#include "valext/linalg.hpp"
#include "valext/random.hpp"

namespace valext {

namespace {

bool nonnegative(const ValueWithZero& v) { return additive_compare(v, ValueWithZero::one(v.group())) >= 0; }
bool positive(const ValueWithZero& v) { return additive_compare(v, ValueWithZero::one(v.group())) > 0; }

}  // namespace

// ---------------------------------------------------------------- FreeModule

FreeModule::FreeModule(const MonomialValuation& V, std::size_t rank) : V_(V), rank_(rank) {}

void FreeModule::check(const Vec& z) const {
  if (z.size() != rank_) throw StructuralError("coordinate vector has the wrong length");
  for (const auto& c : z)
    if (!same_tower(c.field(), V_.function_field())) throw StructuralError("coordinate is not in the valued field");
}

FreeModule::Vec FreeModule::zero() const { return Vec(rank_, FieldElement::from_int(V_.function_field(), 0)); }

ValueWithZero FreeModule::norm(const Vec& z) const {
  check(z);
  ValueWithZero out = ValueWithZero::zero(V_.group());
  for (const auto& c : z) out = additive_min(out, V_.value(c));
  return out;
}

bool FreeModule::contains(const Vec& z) const { return nonnegative(norm(z)); }
bool FreeModule::in_maximal_submodule(const Vec& z) const { return positive(norm(z)); }

std::pair<FieldElement, FreeModule::Vec> FreeModule::unit_part_factor(const Vec& z) const {
  ValueWithZero n = norm(z);
  if (n.is_zero()) throw DomainError("unit part of the zero vector");
  for (const auto& c : z) {
    if (c.is_zero() || !(V_.value(c) == n)) continue;
    FieldElement inv = c.inverse();
    Vec unit;
    for (const auto& d : z) unit.push_back(d * inv);
    return {c, unit};
  }
  throw DomainError("no coordinate attains the norm");
}

// ---------------------------------------------------------------- FreeAlgebra

FreeAlgebra::FreeAlgebra(MonomialValuation V, std::vector<std::string> vars, std::size_t rank)
    : V_(std::move(V)), vars_(std::move(vars)), finite_rank_(rank) {}

FreeAlgebra FreeAlgebra::polynomial(const MonomialValuation& V, std::vector<std::string> vars) {
  if (vars.empty()) throw StructuralError("polynomial algebra needs at least one variable");
  return FreeAlgebra(V, std::move(vars), 0);
}

FreeAlgebra FreeAlgebra::quotient(const MonomialValuation& V, const UPoly& f) {
  const FieldPtr& K = V.function_field();
  if (!same_tower(f.field(), K)) throw StructuralError("presentation is not over the valued field");
  if (f.degree() < 1 || !f.is_monic()) throw StructuralError("presentation must be monic of positive degree");
  for (int i = 0; i <= f.degree(); ++i)
    if (!V.in_ring(f.coeff(i))) throw StructuralError("presentation coefficient " + f.coeff(i).to_string() + " is not in V");
  const auto d = static_cast<std::size_t>(f.degree());
  Table t(d, std::vector<FreeModule::Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Coeffs r = up::rem(*K, up::monomial(*K, K->one(), static_cast<int>(i + j)), f.coeffs());
      FreeModule::Vec row;
      for (std::size_t k = 0; k < d; ++k) row.emplace_back(K, k < r.size() ? r[k] : K->zero());
      t[i][j] = std::move(row);
    }
  FreeAlgebra A(V, {f.var()}, d);
  A.table_ = std::move(t);
  A.presentation_ = f;
  return A;
}

FreeAlgebra FreeAlgebra::structure_constants(const MonomialValuation& V, Table table, std::string basis_name) {
  const std::size_t r = table.size();
  if (r == 0) throw StructuralError("structure constants for the zero algebra");
  for (std::size_t i = 0; i < r; ++i) {
    if (table[i].size() != r) throw StructuralError("structure constant table is not square");
    for (std::size_t j = 0; j < r; ++j) {
      if (table[i][j].size() != r) throw StructuralError("structure constant vector has the wrong length");
      for (std::size_t k = 0; k < r; ++k) {
        const auto& c = table[i][j][k];
        if (!V.in_ring(c)) throw StructuralError("structure constant " + c.to_string() + " is not in V");
        bool expect_unit = (i == 0 && k == j) || (j == 0 && k == i);
        bool unit_row = i == 0 || j == 0;
        if (unit_row && !(c == FieldElement::from_int(V.function_field(), expect_unit ? 1 : 0)))
          throw StructuralError("e_0 is not the unit of the algebra");
      }
    }
  }
  FreeAlgebra A(V, {std::move(basis_name)}, r);
  A.table_ = std::move(table);
  return A;
}

Polynomial FreeAlgebra::zero() const { return Polynomial(V_.function_field(), vars_); }
Polynomial FreeAlgebra::one() const { return scalar(FieldElement::from_int(V_.function_field(), 1)); }

Polynomial FreeAlgebra::scalar(const FieldElement& a) const {
  if (!same_tower(a.field(), V_.function_field())) throw StructuralError("scalar is not in the valued field");
  return Polynomial::constant(a, vars_);
}

Polynomial FreeAlgebra::generator(std::size_t i) const {
  if (is_polynomial()) return Polynomial::variable(V_.function_field(), vars_, i);
  if (i >= finite_rank_) throw StructuralError("basis index out of range");
  Polynomial p(V_.function_field(), vars_);
  p.add_term({static_cast<unsigned>(i)}, V_.function_field()->one());
  return p;
}

namespace {

Polynomial table_mul(const FieldPtr& R, const std::vector<std::string>& vars, const FreeAlgebra::Table& t,
                     const Polynomial& a, const Polynomial& b, const std::function<Elt(const FieldElement&)>& conv) {
  Polynomial out(R, vars);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Elt c = R->mul(ca, cb);
      const auto& row = t.at(ea[0]).at(eb[0]);
      for (std::size_t k = 0; k < row.size(); ++k) {
        Elt s = conv(row[k]);
        if (!R->is_zero(s)) out.add_term({static_cast<unsigned>(k)}, R->mul(c, s));
      }
    }
  return out;
}

}  // namespace

Polynomial FreeAlgebra::mul(const Polynomial& a, const Polynomial& b) const {
  if (is_polynomial()) return a * b;
  return table_mul(V_.function_field(), vars_, table_, a, b, [](const FieldElement& c) { return c.raw(); });
}

Polynomial FreeAlgebra::residue_mul(const Polynomial& a, const Polynomial& b) const {
  if (is_polynomial()) return a * b;
  return table_mul(V_.coefficient_field(), vars_, table_, a, b,
                   [this](const FieldElement& c) { return V_.residue(c).raw(); });
}

ValueWithZero FreeAlgebra::norm(const Polynomial& z) const {
  ValueWithZero out = ValueWithZero::zero(V_.group());
  for (const auto& [e, c] : z.terms()) out = additive_min(out, V_.value({z.field(), c}));
  return out;
}

bool FreeAlgebra::contains(const Polynomial& z) const { return nonnegative(norm(z)); }

Polynomial FreeAlgebra::reduce(const Polynomial& z) const {
  Polynomial out(V_.coefficient_field(), vars_);
  for (const auto& [e, c] : z.terms()) out.add_term(e, V_.residue({z.field(), c}).raw());
  return out;
}

std::pair<FieldElement, Polynomial> FreeAlgebra::unit_part_factor(const Polynomial& z) const {
  ValueWithZero n = norm(z);
  if (n.is_zero()) throw DomainError("unit part of zero");
  for (const auto& [e, c] : z.terms()) {
    FieldElement a(z.field(), c);
    if (!(V_.value(a) == n)) continue;
    return {a, a.inverse() * z};
  }
  throw DomainError("no coefficient attains the norm");
}

std::string FreeAlgebra::describe() const {
  std::string base = "V = " + V_.describe();
  if (is_polynomial()) {
    std::string v;
    for (std::size_t i = 0; i < vars_.size(); ++i) v += (i ? "," : "") + vars_[i];
    return "V[" + v + "] over " + base;
  }
  if (presentation_) return "V[" + vars_[0] + "]/(" + presentation_->to_string() + ") over " + base;
  return "rank " + std::to_string(finite_rank_) + " structure-constant algebra over " + base;
}

// ---------------------------------------------------------------- norm checks

namespace {

Polynomial random_algebra_element(const FreeAlgebra& A, std::mt19937_64& rng, bool integral) {
  const MonomialValuation& V = A.valuation();
  Polynomial z = A.zero();
  std::size_t count = A.is_polynomial() ? 3 : A.finite_rank();
  for (std::size_t t = 0; t < count; ++t) {
    FieldElement c = integral ? random_integral(V, rng, 1) : random_fraction(V, rng, 1);
    Polynomial basis = A.one();
    if (A.is_polynomial()) {
      for (std::size_t i = 0; i < A.vars().size(); ++i) {
        auto e = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < e; ++k) basis = basis * A.generator(i);
      }
    } else {
      basis = A.generator(t);
    }
    z = z + A.scalar(c) * basis;
  }
  return z;
}

// Coordinates of the inverse of z in a finite-rank algebra, if z is invertible over K.
std::optional<Polynomial> finite_inverse(const FreeAlgebra& A, const Polynomial& z) {
  const FieldPtr& K = A.valuation().function_field();
  const std::size_t r = A.finite_rank();
  linalg::Matrix M(r, std::vector<Elt>(r, K->zero()));
  for (std::size_t j = 0; j < r; ++j) {
    Polynomial col = A.mul(z, A.generator(j));
    for (const auto& [e, c] : col.terms()) M[e[0]][j] = c;
  }
  std::vector<Elt> rhs(r, K->zero());
  rhs[0] = K->one();
  auto sol = linalg::solve(*K, M, rhs);
  if (!sol) return std::nullopt;
  Polynomial w = A.zero();
  for (std::size_t k = 0; k < r; ++k) w.add_term({static_cast<unsigned>(k)}, (*sol)[k]);
  return w;
}

}  // namespace

AlgebraNormReport check_algebra_norm(const FreeAlgebra& A, std::mt19937_64& rng, int samples) {
  AlgebraNormReport rep;
  const MonomialValuation& V = A.valuation();
  for (int s = 0; s < samples; ++s) {
    FieldElement a = random_fraction(V, rng);
    ++rep.scalars_checked;
    if (!(A.norm(A.scalar(a)) == V.value(a)))
      rep.violations.push_back({"scalar norm", a.to_string()});

    Polynomial z = random_algebra_element(A, rng, false), w = random_algebra_element(A, rng, false);
    ++rep.products_checked;
    if (additive_compare(A.norm(A.mul(z, w)), mul(A.norm(z), A.norm(w))) < 0)
      rep.violations.push_back({"submultiplicativity", z.to_string() + " ; " + w.to_string()});

    if (A.is_polynomial()) {
      FieldElement u = random_unit(V, rng);
      ++rep.units_checked;
      if (!A.norm(A.scalar(u)).is_one()) rep.violations.push_back({"unit norm", u.to_string()});
    } else {
      // unit scalar + element of mA: a unit of A since mA lies in its Jacobson radical
      Polynomial u = A.scalar(random_unit(V, rng, 1));
      for (std::size_t k = 0; k < A.finite_rank(); ++k)
        u = u + A.scalar(random_in_maximal_ideal(V, rng, 1)) * A.generator(k);
      auto inv = finite_inverse(A, u);
      if (!inv || !A.contains(*inv)) continue;
      ++rep.units_checked;
      if (!A.norm(u).is_one() || !A.norm(*inv).is_one())
        rep.violations.push_back({"unit norm", u.to_string()});
    }
  }
  return rep;
}

// ---------------------------------------------------------------- reducedness

namespace {

// Basis of the kernel of a square matrix over F.
std::vector<std::vector<Elt>> kernel(const Field& F, linalg::Matrix M) {
  const std::size_t n = M.size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && F.is_zero(M[p][col])) ++p;
    if (p == n) continue;
    std::swap(M[p], M[row]);
    Elt inv = F.inv(M[row][col]);
    for (auto& x : M[row]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || F.is_zero(M[r][col])) continue;
      Elt f = M[r][col];
      for (std::size_t c = 0; c < n; ++c) M[r][c] = F.sub(M[r][c], F.mul(f, M[row][c]));
    }
    pivot_col.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  std::vector<std::vector<Elt>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elt> v(n, F.zero());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = F.neg(M[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

int nilpotency(const FreeAlgebra& A, const Polynomial& z) {
  Polynomial p = z;
  for (int k = 1; k <= static_cast<int>(A.finite_rank()) + 1; ++k) {
    if (p.is_zero()) return k;
    p = A.residue_mul(p, z);
  }
  return 0;
}

}  // namespace

ReducedLift is_reduced_lift(const FreeAlgebra& A) {
  ReducedLift out;
  if (A.is_polynomial()) {
    out.residue_reduced = out.certified_reduced = true;
    out.diagnosis = "residue algebra is a polynomial ring over a field";
    return out;
  }
  const MonomialValuation& V = A.valuation();
  const FieldPtr& F = V.coefficient_field();
  if (A.presentation()) {
    Coeffs fbar;
    for (int i = 0; i <= A.presentation()->degree(); ++i) fbar.push_back(V.residue(A.presentation()->coeff(i)).raw());
    up::trim(*F, fbar);
    UPoly fb(F, fbar, A.vars()[0]);
    SquarefreeResult sq = squarefree_part(fb);
    bool reduced = std::all_of(sq.pieces.begin(), sq.pieces.end(), [](const Factor& f) { return f.multiplicity == 1; });
    out.residue_reduced = out.certified_reduced = reduced;
    if (reduced) {
      out.diagnosis = "reduction " + fb.to_string() + " is square-free";
      return out;
    }
    Polynomial nil(F, A.vars());
    for (int i = 0; i <= sq.part.degree(); ++i) nil.add_term({static_cast<unsigned>(i)}, sq.part.coeffs()[i]);
    out.nilpotent = nil;
    out.nilpotency_index = nilpotency(A, nil);
    out.diagnosis = "reduction " + fb.to_string() + " has square-free part " + sq.part.to_string() + " of lower degree";
    return out;
  }
  // Trace form of the residue algebra.
  const std::size_t r = A.finite_rank();
  auto trace = [&](const Polynomial& z) {
    Elt t = F->zero();
    for (std::size_t i = 0; i < r; ++i) {
      Polynomial col = A.residue_mul(z, A.reduce(A.generator(i)));
      t = F->add(t, col.coeff({static_cast<unsigned>(i)}).raw());
    }
    return t;
  };
  linalg::Matrix T(r, std::vector<Elt>(r, F->zero()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      T[i][j] = trace(A.residue_mul(A.reduce(A.generator(i)), A.reduce(A.generator(j))));
  if (!F->is_zero(linalg::determinant(*F, T))) {
    out.residue_reduced = out.certified_reduced = true;
    out.diagnosis = "residue algebra has a nondegenerate trace form";
    return out;
  }
  if (F->characteristic() != 0)
    throw CapabilityError("degenerate trace form in positive characteristic does not decide reducedness");
  // Characteristic 0: the radical of the trace form is the nilradical.
  auto ker = kernel(*F, T);
  Polynomial nil(F, A.vars());
  for (std::size_t k = 0; k < r; ++k) nil.add_term({static_cast<unsigned>(k)}, ker.at(0)[k]);
  out.nilpotent = nil;
  out.nilpotency_index = nilpotency(A, nil);
  out.diagnosis = "trace form of the residue algebra is degenerate";
  return out;
}

// ---------------------------------------------------------------- Gauss extension

GaussExtension::GaussExtension(FreeAlgebra A, FieldPtr frac, FieldPtr residue)
    : A_(std::move(A)), frac_(std::move(frac)), residue_(std::move(residue)) {}

GaussExtension gauss_extend(const FreeAlgebra& A, const std::string& residue_suffix) {
  const MonomialValuation& V = A.valuation();
  FieldPtr frac = V.function_field(), res = V.coefficient_field();
  if (A.is_polynomial()) {
    for (const auto& v : A.vars()) {
      frac = Field::adjoin_transcendental(frac, v);
      res = Field::adjoin_transcendental(res, v + residue_suffix);
    }
    return GaussExtension(A, frac, res);
  }
  if (!A.presentation())
    throw CapabilityError("Gauss extension of a structure-constant algebra needs a monic presentation");
  const UPoly& f = *A.presentation();
  Coeffs fbar;
  for (int i = 0; i <= f.degree(); ++i) fbar.push_back(V.residue(f.coeff(i)).raw());
  up::trim(*res, fbar);
  UPoly fb(res, fbar, f.var());
  if (f.degree() == 1) return GaussExtension(A, frac, res);
  Factorization fac = factor(fb);
  if (fac.factors.size() != 1 || fac.factors[0].multiplicity != 1) {
    std::string s;
    for (const auto& fc : fac.factors)
      s += "(" + fc.poly.to_string() + ")" + (fc.multiplicity > 1 ? "^" + std::to_string(fc.multiplicity) : "");
    throw PreconditionError("residue algebra is not a domain: " + fb.to_string() + " = " + s);
  }
  // f is irreducible over K because its reduction is.
  frac = Field::adjoin_algebraic(frac, f.var(), f.coeffs(), false);
  res = Field::adjoin_algebraic(res, f.var() + residue_suffix, fbar, false);
  return GaussExtension(A, frac, res);
}

ValueWithZero GaussExtension::value_at(int level, const Elt& z) const {
  const MonomialValuation& V = A_.valuation();
  const FieldPtr& K = V.function_field();
  if (level == 0) return V.value({K, z});
  if (!A_.is_polynomial()) {
    ValueWithZero out = ValueWithZero::zero(V.group());
    for (const auto& c : Field::as_poly(z)) out = additive_min(out, V.value({K, c}));
    return out;
  }
  const auto& r = Field::as_ratfun(z);
  auto gauss = [&](const Coeffs& p) {
    ValueWithZero out = ValueWithZero::zero(V.group());
    for (const auto& c : p) out = additive_min(out, value_at(level - 1, c));
    return out;
  };
  if (r.num.empty()) return ValueWithZero::zero(V.group());
  return div(gauss(r.num), gauss(r.den));
}

ValueWithZero GaussExtension::value(const FieldElement& z) const {
  if (!same_tower(z.field(), frac_)) throw StructuralError("element is not in the fraction field of the algebra");
  return value_at(frac_->depth() - A_.valuation().function_field()->depth(), z.raw());
}

Elt GaussExtension::residue_at(int level, const Elt& z) const {
  const MonomialValuation& V = A_.valuation();
  const FieldPtr& K = V.function_field();
  const int kd = K->depth(), fd = V.coefficient_field()->depth();
  if (level == 0) return V.residue({K, z}).raw();
  const Field& R = *residue_->level(fd + level);
  const Field& P = *frac_->level(kd + level - 1);
  if (!A_.is_polynomial()) {
    Coeffs out;
    for (const auto& c : Field::as_poly(z)) out.push_back(V.residue({K, c}).raw());
    up::trim(*R.parent(), out);
    return R.make_algebraic(std::move(out));
  }
  const auto& r = Field::as_ratfun(z);
  if (r.num.empty()) return R.zero();
  // Divide numerator and denominator by a denominator coefficient of least value.
  const Elt* pivot = nullptr;
  ValueWithZero best = ValueWithZero::zero(V.group());
  for (const auto& c : r.den) {
    ValueWithZero v = value_at(level - 1, c);
    if (v.is_zero()) continue;
    if (!pivot || additive_compare(v, best) < 0) {
      pivot = &c;
      best = v;
    }
  }
  Elt inv = P.inv(*pivot);
  auto reduce = [&](const Coeffs& p) {
    Coeffs out;
    for (const auto& c : p) out.push_back(residue_at(level - 1, P.mul(c, inv)));
    up::trim(*R.parent(), out);
    return out;
  };
  return R.make_ratfun(reduce(r.num), reduce(r.den));
}

FieldElement GaussExtension::residue(const FieldElement& z) const {
  if (!same_tower(z.field(), frac_)) throw StructuralError("element is not in the fraction field of the algebra");
  if (!in_ring(z)) throw DomainError("residue of an element of negative value " + value(z).to_string());
  return {residue_, residue_at(frac_->depth() - A_.valuation().function_field()->depth(), z.raw())};
}

bool GaussExtension::in_ring(const FieldElement& z) const { return nonnegative(value(z)); }

FieldElement GaussExtension::embed(const Polynomial& z) const {
  const FieldPtr& K = A_.valuation().function_field();
  FieldElement out = FieldElement::from_int(frac_, 0);
  for (const auto& [e, c] : z.terms()) {
    FieldElement term(frac_, frac_->lift(c, K->depth()));
    if (A_.is_polynomial()) {
      for (std::size_t i = 0; i < e.size(); ++i)
        term *= FieldElement::generator(frac_, K->depth() + 1 + static_cast<int>(i)).pow(e[i]);
    } else if (frac_->depth() > K->depth()) {
      term *= FieldElement::generator(frac_, K->depth() + 1).pow(e[0]);
    } else {
      term *= (-FieldElement(frac_, A_.presentation()->coeff(0).raw())).pow(e[0]);
    }
    out += term;
  }
  return out;
}

}  // namespace valext
