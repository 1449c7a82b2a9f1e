#pragma once

#include <gmpxx.h>

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qserre/poly2.hpp"
#include "qserre/ratf.hpp"

namespace qserre {

/// Small arithmetic-expression AST shared by the RatF, PBW-element and
/// free-algebra grammars: integer literals, symbols, + - * / ^ with the
/// usual precedence, parentheses, and juxtaposition as multiplication.
struct ExprNode {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind;
  mpz_class number;                        // Number
  std::string symbol;                      // Symbol
  std::shared_ptr<const ExprNode> a, b;    // binary / unary operands
  long exponent = 0;                       // Pow
};
using ExprPtr = std::shared_ptr<const ExprNode>;

namespace detail {

struct Token {
  enum class Kind { Number, Symbol, Op, End } kind;
  std::string text;
  mpz_class number;
  size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg + " at line " + std::to_string(tok_.line) + ", column " +
                      std::to_string(tok_.col));
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    const char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::Number;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      tok_.number = mpz_class(tok_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_' || src_[pos_] == '\'')) {
        ++pos_;
        ++col_;
      }
      tok_.kind = Token::Kind::Symbol;
      tok_.text = std::string(src_.substr(start, pos_ - start));
      return;
    }
    if (std::string("+-*/^()").find(ch) != std::string::npos) {
      tok_.kind = Token::Kind::Op;
      tok_.text = std::string(1, ch);
      ++pos_;
      ++col_;
      return;
    }
    throw parse_error(std::string("unexpected character '") + ch + "' at line " +
                      std::to_string(line_) + ", column " + std::to_string(col_));
  }

  std::string_view src_;
  size_t pos_ = 0, line_ = 1, col_ = 1;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lx_(src) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lx_.peek().kind != Token::Kind::End) lx_.fail("trailing input");
    return e;
  }

 private:
  bool is_op(const char* t) const {
    return lx_.peek().kind == Token::Kind::Op && lx_.peek().text == t;
  }
  bool starts_factor() const {
    const auto& t = lx_.peek();
    return t.kind == Token::Kind::Number || t.kind == Token::Kind::Symbol ||
           (t.kind == Token::Kind::Op && t.text == "(");
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (is_op("+") || is_op("-")) {
      const bool add = is_op("+");
      lx_.next();
      auto n = std::make_shared<ExprNode>();
      n->kind = add ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      n->a = e;
      n->b = term();
      e = n;
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      if (is_op("*") || is_op("/")) {
        const bool mul = is_op("*");
        lx_.next();
        auto n = std::make_shared<ExprNode>();
        n->kind = mul ? ExprNode::Kind::Mul : ExprNode::Kind::Div;
        n->a = e;
        n->b = factor();
        e = n;
      } else if (starts_factor()) {  // juxtaposition
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprNode::Kind::Mul;
        n->a = e;
        n->b = factor();
        e = n;
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    if (is_op("-")) {
      lx_.next();
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Neg;
      n->a = factor();
      return n;
    }
    if (is_op("+")) {
      lx_.next();
      return factor();
    }
    ExprPtr e = atom();
    while (is_op("^")) {
      lx_.next();
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Pow;
      n->a = e;
      n->exponent = integer_exponent();
      e = n;
    }
    return e;
  }

  long integer_exponent() {
    bool paren = false, neg = false;
    if (is_op("(")) {
      paren = true;
      lx_.next();
    }
    if (is_op("-")) {
      neg = true;
      lx_.next();
    }
    if (lx_.peek().kind != Token::Kind::Number) lx_.fail("expected integer exponent");
    const long v = std::stol(lx_.next().text);
    if (paren) {
      if (!is_op(")")) lx_.fail("expected ')'");
      lx_.next();
    }
    return neg ? -v : v;
  }

  ExprPtr atom() {
    const auto& t = lx_.peek();
    if (t.kind == Token::Kind::Number) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Number;
      n->number = lx_.next().number;
      return n;
    }
    if (t.kind == Token::Kind::Symbol) {
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprNode::Kind::Symbol;
      n->symbol = lx_.next().text;
      return n;
    }
    if (is_op("(")) {
      lx_.next();
      ExprPtr e = expr();
      if (!is_op(")")) lx_.fail("expected ')'");
      lx_.next();
      return e;
    }
    lx_.fail("expected number, symbol or '('");
  }

  Lexer lx_;
};

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src) { return detail::Parser(src).parse(); }

/// Evaluate an AST in a caller-supplied ring context. Ctx must provide:
///   Value; from_integer(mpz); symbol(name); add/sub/mul/neg;
///   div(a, b) (may throw); pow(a, long exponent) (may throw).
template <class Ctx>
typename Ctx::Value eval_expr(const ExprPtr& node, Ctx& ctx) {
  using K = ExprNode::Kind;
  switch (node->kind) {
    case K::Number:
      return ctx.from_integer(node->number);
    case K::Symbol:
      return ctx.symbol(node->symbol);
    case K::Add:
      return ctx.add(eval_expr(node->a, ctx), eval_expr(node->b, ctx));
    case K::Sub:
      return ctx.sub(eval_expr(node->a, ctx), eval_expr(node->b, ctx));
    case K::Mul:
      return ctx.mul(eval_expr(node->a, ctx), eval_expr(node->b, ctx));
    case K::Div:
      return ctx.div(eval_expr(node->a, ctx), eval_expr(node->b, ctx));
    case K::Neg:
      return ctx.neg(eval_expr(node->a, ctx));
    case K::Pow:
      return ctx.pow(eval_expr(node->a, ctx), node->exponent);
  }
  throw std::logic_error("unreachable");
}

/// Evaluation context for plain rational functions: symbols r and s only.
struct RatFContext {
  using Value = RatF;
  Value from_integer(const mpz_class& v) { return RatF(v); }
  Value symbol(const std::string& name) {
    if (name == "r") return RatF::r();
    if (name == "s") return RatF::s();
    throw parse_error("unknown symbol '" + name + "' in rational-function expression");
  }
  Value add(const Value& a, const Value& b) { return a + b; }
  Value sub(const Value& a, const Value& b) { return a - b; }
  Value mul(const Value& a, const Value& b) { return a * b; }
  Value div(const Value& a, const Value& b) { return a / b; }
  Value neg(const Value& a) { return -a; }
  Value pow(const Value& a, long e) { return a.pow(static_cast<int>(e)); }
};

inline RatF parse_ratf(std::string_view src) {
  RatFContext ctx;
  return eval_expr(parse_expr(src), ctx);
}

}  // namespace qserre
