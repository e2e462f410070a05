#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "valext/errors.hpp"

namespace valext::detail {

// Arithmetic expression over integer literals and named symbols.
struct Expr {
  enum class Op { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Op op = Op::Number;
  mpz_class number;
  std::string symbol;
  long exponent = 0;
  std::unique_ptr<Expr> lhs, rhs;
};

// Parses `text`; identifiers are matched greedily against `symbols`, so names such as
// "a^(1/2)" are single symbols. Throws ParseError.
std::unique_ptr<Expr> parse_expression(std::string_view text, const std::vector<std::string>& symbols);

// Ring must provide integer(mpz), symbol(name), add, sub, mul, div, neg and pow(T, long).
template <class T, class Ring>
T evaluate(const Expr& e, const Ring& ring) {
  switch (e.op) {
    case Expr::Op::Number:
      return ring.integer(e.number);
    case Expr::Op::Symbol:
      return ring.symbol(e.symbol);
    case Expr::Op::Add:
      return ring.add(evaluate<T>(*e.lhs, ring), evaluate<T>(*e.rhs, ring));
    case Expr::Op::Sub:
      return ring.sub(evaluate<T>(*e.lhs, ring), evaluate<T>(*e.rhs, ring));
    case Expr::Op::Mul:
      return ring.mul(evaluate<T>(*e.lhs, ring), evaluate<T>(*e.rhs, ring));
    case Expr::Op::Div:
      return ring.div(evaluate<T>(*e.lhs, ring), evaluate<T>(*e.rhs, ring));
    case Expr::Op::Neg:
      return ring.neg(evaluate<T>(*e.lhs, ring));
    case Expr::Op::Pow:
      return ring.pow(evaluate<T>(*e.lhs, ring), e.exponent);
  }
  throw ParseError("corrupt expression");
}

}  // namespace valext::detail
