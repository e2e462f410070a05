#include "valext/expr.hpp"

#include <cctype>

namespace valext::detail {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& symbols) : s_(text), symbols_(symbols) {}

  std::unique_ptr<Expr> run() {
    auto e = parse_sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::unique_ptr<Expr> binary(Expr::Op op, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b) {
    auto e = std::make_unique<Expr>();
    e->op = op;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  std::unique_ptr<Expr> parse_sum() {
    auto e = parse_product();
    for (;;) {
      if (accept('+'))
        e = binary(Expr::Op::Add, std::move(e), parse_product());
      else if (accept('-'))
        e = binary(Expr::Op::Sub, std::move(e), parse_product());
      else
        return e;
    }
  }

  std::unique_ptr<Expr> parse_product() {
    auto e = parse_unary();
    for (;;) {
      if (accept('*'))
        e = binary(Expr::Op::Mul, std::move(e), parse_unary());
      else if (accept('/'))
        e = binary(Expr::Op::Div, std::move(e), parse_unary());
      else
        return e;
    }
  }

  std::unique_ptr<Expr> parse_unary() {
    if (accept('-')) {
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Neg;
      e->lhs = parse_unary();
      return e;
    }
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  long parse_exponent() {
    bool paren = accept('(');
    bool negative = accept('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (paren && !accept(')')) fail("expected ')'");
    return negative ? -v : v;
  }

  std::unique_ptr<Expr> parse_power() {
    auto base = parse_atom();
    if (accept('^')) {
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Pow;
      e->lhs = std::move(base);
      e->exponent = parse_exponent();
      if (accept('^')) fail("chained exponent needs parentheses");
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> parse_atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      auto e = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto e = std::make_unique<Expr>();
      e->op = Expr::Op::Number;
      e->number = mpz_class(std::string(s_.substr(start, pos_ - start)));
      return e;
    }
    std::size_t best = 0;
    const std::string* match = nullptr;
    for (const auto& sym : symbols_) {
      if (sym.size() > best && s_.substr(pos_, sym.size()) == sym) {
        // A plain identifier must not continue past the symbol.
        std::size_t end = pos_ + sym.size();
        bool cont = end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_' ||
                                        s_[end] == '\'');
        if (cont) continue;
        best = sym.size();
        match = &sym;
      }
    }
    if (!match) {
      std::size_t end = pos_;
      while (end < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_' || s_[end] == '\''))
        ++end;
      if (end == pos_) fail("unexpected '" + std::string(1, c) + "'");
      fail("unknown symbol '" + std::string(s_.substr(pos_, end - pos_)) + "'");
    }
    pos_ += best;
    auto e = std::make_unique<Expr>();
    e->op = Expr::Op::Symbol;
    e->symbol = *match;
    return e;
  }

  std::string_view s_;
  const std::vector<std::string>& symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expression(std::string_view text, const std::vector<std::string>& symbols) {
  return Parser(text, symbols).run();
}

}  // namespace valext::detail
