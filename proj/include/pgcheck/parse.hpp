#pragma once

// Expression parser for the structure-file input language.
//
// Grammar (EBNF, also documented in the repository):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-'] integer)*
//   primary := integer | name | '(' expr ')'
//
// Names resolve against the declared variable list; the bare name `i` denotes
// sqrt(-1) unless it is a declared variable.  In poly mode division is only
// defined by nonzero constants, in laurent mode by monomials.

#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pgcheck/poly.hpp"
#include "pgcheck/ratfunc.hpp"

namespace pgcheck {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

enum class ExprMode { poly, laurent, ratfunc };

namespace detail {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::number, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::name, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::end, "", src.size()});
  return out;
}

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
  enum class Kind { number, var, imag, add, sub, mul, div, neg, pow } kind;
  std::string digits;  // number
  size_t var_index = 0;
  long exponent = 0;  // pow
  size_t pos = 0;
  NodePtr lhs, rhs;
};

class Parser {
 public:
  Parser(const std::string& src, const std::vector<std::string>& vars)
      : tokens_(tokenize(src)), vars_(vars) {}

  NodePtr parse() {
    NodePtr e = expr();
    if (cur().kind != Tok::end) throw ParseError("unexpected trailing input", cur().pos);
    return e;
  }

 private:
  const Token& cur() const { return tokens_[idx_]; }
  Token take() { return tokens_[idx_++]; }
  bool accept(Tok k) {
    if (cur().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    while (cur().kind == Tok::plus || cur().kind == Tok::minus) {
      Token op = take();
      NodePtr rhs = term();
      NodePtr n = std::make_unique<Node>();
      n->kind = op.kind == Tok::plus ? Node::Kind::add : Node::Kind::sub;
      n->pos = op.pos;
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = unary();
    while (cur().kind == Tok::star || cur().kind == Tok::slash) {
      Token op = take();
      NodePtr rhs = unary();
      NodePtr n = std::make_unique<Node>();
      n->kind = op.kind == Tok::star ? Node::Kind::mul : Node::Kind::div;
      n->pos = op.pos;
      n->lhs = std::move(lhs);
      n->rhs = std::move(rhs);
      lhs = std::move(n);
    }
    return lhs;
  }

  NodePtr unary() {
    if (cur().kind == Tok::minus) {
      Token op = take();
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::Kind::neg;
      n->pos = op.pos;
      n->lhs = unary();
      return n;
    }
    if (cur().kind == Tok::plus) {
      take();
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    while (cur().kind == Tok::caret) {
      Token op = take();
      bool neg = false;
      if (accept(Tok::minus)) neg = true;
      if (cur().kind != Tok::number) throw ParseError("expected integer exponent", cur().pos);
      Token e = take();
      long v = 0;
      try {
        v = std::stol(e.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", e.pos);
      }
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::Kind::pow;
      n->pos = op.pos;
      n->exponent = neg ? -v : v;
      n->lhs = std::move(base);
      base = std::move(n);
    }
    return base;
  }

  NodePtr primary() {
    if (cur().kind == Tok::number) {
      Token t = take();
      NodePtr n = std::make_unique<Node>();
      n->kind = Node::Kind::number;
      n->digits = t.text;
      n->pos = t.pos;
      return n;
    }
    if (cur().kind == Tok::name) {
      Token t = take();
      NodePtr n = std::make_unique<Node>();
      n->pos = t.pos;
      for (size_t k = 0; k < vars_.size(); ++k) {
        if (vars_[k] == t.text) {
          n->kind = Node::Kind::var;
          n->var_index = k;
          return n;
        }
      }
      if (t.text == "i") {
        n->kind = Node::Kind::imag;
        return n;
      }
      throw ParseError("unknown variable '" + t.text + "'", t.pos);
    }
    if (accept(Tok::lparen)) {
      NodePtr e = expr();
      if (!accept(Tok::rparen)) throw ParseError("expected ')'", cur().pos);
      return e;
    }
    throw ParseError("expected number, variable or '('", cur().pos);
  }

  std::vector<Token> tokens_;
  size_t idx_ = 0;
  const std::vector<std::string>& vars_;
};

// Evaluation in the polynomial / Laurent tower.  Division is defined by
// constants (poly mode) or monomials (laurent mode) only.
inline Poly eval_poly(const Node& n, const std::vector<std::string>& vars, bool laurent) {
  switch (n.kind) {
    case Node::Kind::number:
      return Poly::constant(vars, laurent, Scalar::from_decimal_string(n.digits));
    case Node::Kind::imag:
      return Poly::constant(vars, laurent, Scalar::i());
    case Node::Kind::var:
      return Poly::variable(vars, laurent, n.var_index);
    case Node::Kind::add:
      return eval_poly(*n.lhs, vars, laurent) + eval_poly(*n.rhs, vars, laurent);
    case Node::Kind::sub:
      return eval_poly(*n.lhs, vars, laurent) - eval_poly(*n.rhs, vars, laurent);
    case Node::Kind::mul:
      return eval_poly(*n.lhs, vars, laurent) * eval_poly(*n.rhs, vars, laurent);
    case Node::Kind::neg:
      return -eval_poly(*n.lhs, vars, laurent);
    case Node::Kind::div: {
      Poly num = eval_poly(*n.lhs, vars, laurent);
      Poly den = eval_poly(*n.rhs, vars, laurent);
      if (den.is_zero()) throw ParseError("division by zero polynomial", n.pos);
      if (den.is_constant()) return num.scaled(Scalar(1) / den.constant_value());
      if (!laurent) throw ParseError("division by variable in poly mode", n.pos);
      if (den.terms().size() == 1) {
        const auto& [e, c] = *den.terms().begin();
        Exponents inv(e.size());
        for (size_t k = 0; k < e.size(); ++k) inv[k] = -e[k];
        return num.shifted(inv).scaled(Scalar(1) / c);
      }
      throw ParseError("division defined only by monomials in laurent mode", n.pos);
    }
    case Node::Kind::pow: {
      long e = n.exponent;
      if (e >= 0) {
        Poly base = eval_poly(*n.lhs, vars, laurent);
        Poly acc = Poly::constant(vars, laurent, Scalar(1));
        for (long k = 0; k < e; ++k) acc *= base;
        return acc;
      }
      Poly base = eval_poly(*n.lhs, vars, laurent);
      if (base.is_zero()) throw ParseError("division by zero polynomial", n.pos);
      if (base.is_constant()) {
        Scalar inv = Scalar(1) / base.constant_value();
        Poly acc = Poly::constant(vars, laurent, Scalar(1));
        for (long k = 0; k < -e; ++k) acc = acc.scaled(inv);
        return acc;
      }
      if (!laurent) throw ParseError("negative exponent in poly mode", n.pos);
      if (base.terms().size() == 1) {
        const auto& [exps, c] = *base.terms().begin();
        Exponents inv(exps.size());
        for (size_t k = 0; k < exps.size(); ++k) inv[k] = exps[k] * static_cast<int>(e);
        Scalar cc(1);
        Scalar icc = Scalar(1) / c;
        for (long k = 0; k < -e; ++k) cc = cc * icc;
        return Poly::monomial(vars, laurent, inv, cc);
      }
      throw ParseError("negative power of a non-monomial in laurent mode", n.pos);
    }
  }
  throw ParseError("internal parser error", n.pos);
}

inline RatFunc eval_ratfunc(const Node& n, const std::vector<std::string>& vars) {
  switch (n.kind) {
    case Node::Kind::number:
      return RatFunc::constant(vars, Scalar::from_decimal_string(n.digits));
    case Node::Kind::imag:
      return RatFunc::constant(vars, Scalar::i());
    case Node::Kind::var:
      return RatFunc(Poly::variable(vars, false, n.var_index));
    case Node::Kind::add:
      return eval_ratfunc(*n.lhs, vars) + eval_ratfunc(*n.rhs, vars);
    case Node::Kind::sub:
      return eval_ratfunc(*n.lhs, vars) - eval_ratfunc(*n.rhs, vars);
    case Node::Kind::mul:
      return eval_ratfunc(*n.lhs, vars) * eval_ratfunc(*n.rhs, vars);
    case Node::Kind::neg:
      return -eval_ratfunc(*n.lhs, vars);
    case Node::Kind::div: {
      RatFunc den = eval_ratfunc(*n.rhs, vars);
      if (den.is_zero()) throw ParseError("division by zero polynomial", n.pos);
      return eval_ratfunc(*n.lhs, vars) / den;
    }
    case Node::Kind::pow: {
      RatFunc base = eval_ratfunc(*n.lhs, vars);
      long e = n.exponent;
      if (e < 0) {
        if (base.is_zero()) throw ParseError("division by zero polynomial", n.pos);
        base = RatFunc::constant(vars, Scalar(1)) / base;
        e = -e;
      }
      RatFunc acc = RatFunc::constant(vars, Scalar(1));
      for (long k = 0; k < e; ++k) acc *= base;
      return acc;
    }
  }
  throw ParseError("internal parser error", n.pos);
}

}  // namespace detail

inline Poly parse_poly(const std::string& src, const std::vector<std::string>& vars,
                       bool laurent = false) {
  detail::Parser p(src, vars);
  return detail::eval_poly(*p.parse(), vars, laurent);
}

inline RatFunc parse_ratfunc(const std::string& src, const std::vector<std::string>& vars) {
  detail::Parser p(src, vars);
  return detail::eval_ratfunc(*p.parse(), vars);
}

using Expression = std::variant<Poly, RatFunc>;

inline Expression parse_expression(const std::string& src, const std::vector<std::string>& vars,
                                   ExprMode mode) {
  if (mode == ExprMode::ratfunc) return parse_ratfunc(src, vars);
  return parse_poly(src, vars, mode == ExprMode::laurent);
}

// Scalar constants ("1/2", "-i", "3+2*i", ...) are expressions over no variables.
inline Scalar parse_scalar(const std::string& src) {
  Poly p = parse_poly(src, {}, false);
  return p.constant_value();
}

// Linear combination of named basis elements, e.g. "2*e - f" or "0".
// Parsed as a polynomial over the basis names and required to be homogeneous
// of degree one (or zero).
inline std::vector<Scalar> parse_linear_combo(const std::string& src,
                                              const std::vector<std::string>& names) {
  Poly p = parse_poly(src, names, false);
  std::vector<Scalar> out(names.size(), Scalar(0));
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    int where = -1;
    for (size_t k = 0; k < e.size(); ++k) {
      deg += e[k];
      if (e[k] != 0) where = static_cast<int>(k);
    }
    if (deg != 1) throw ParseError("expected a linear combination of basis elements", 0);
    out[static_cast<size_t>(where)] = c;
  }
  return out;
}

}  // namespace pgcheck
