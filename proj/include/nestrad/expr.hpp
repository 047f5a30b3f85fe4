#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nestrad/errors.hpp"
#include "nestrad/numeric.hpp"

namespace nestrad {

enum class ExprKind { Integer, Index, Neg, Add, Sub, Mul, Div, Pow };

/// Immutable AST of a rational-valued arithmetic expression in the index variable `i`.
///
/// Integer literals are nonnegative; a leading minus is a Neg node. A Pow node's
/// exponent is itself an integer-literal tower (literals combined with unary
/// minus and `^`) whose value is an integer, so every expression evaluates to
/// an exact rational.
class Expr {
 public:
  static Expr literal(Integer value) {
    if (value < 0) throw std::invalid_argument("integer literal must be nonnegative");
    return Expr(ExprKind::Integer, std::move(value), {});
  }
  static Expr literal(long value) { return literal(Integer(value)); }
  static Expr index() { return Expr(ExprKind::Index, Integer(0), {}); }
  static Expr negate(Expr operand) { return Expr(ExprKind::Neg, Integer(0), {std::move(operand)}); }
  static Expr add(Expr lhs, Expr rhs) { return binary(ExprKind::Add, std::move(lhs), std::move(rhs)); }
  static Expr sub(Expr lhs, Expr rhs) { return binary(ExprKind::Sub, std::move(lhs), std::move(rhs)); }
  static Expr mul(Expr lhs, Expr rhs) { return binary(ExprKind::Mul, std::move(lhs), std::move(rhs)); }
  static Expr div(Expr lhs, Expr rhs) { return binary(ExprKind::Div, std::move(lhs), std::move(rhs)); }
  /// Throws std::invalid_argument unless `exponent` is an integer-valued literal tower.
  static Expr power(Expr base, Expr exponent) {
    if (abs(exponent_value(exponent)) > kMaxExponent) throw std::invalid_argument("exponent out of range");
    return Expr(ExprKind::Pow, Integer(0), {std::move(base), std::move(exponent)});
  }
  static Expr power(Expr base, long exponent) {
    Expr e = literal(exponent < 0 ? -exponent : exponent);
    return power(std::move(base), exponent < 0 ? negate(std::move(e)) : std::move(e));
  }

  ExprKind kind() const noexcept { return node_->kind; }
  /// Literal value; only meaningful for ExprKind::Integer.
  const Integer& value() const noexcept { return node_->value; }
  /// Neg operand, or left operand / Pow base.
  const Expr& lhs() const { return node_->children.at(0); }
  /// Right operand / Pow exponent.
  const Expr& rhs() const { return node_->children.at(1); }

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == ExprKind::Integer) return a.value() == b.value();
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    if (ca.size() != cb.size()) return false;
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (!(ca[k] == cb[k])) return false;
    }
    return true;
  }

  /// Largest exponent magnitude accepted anywhere in a literal tower.
  static constexpr long kMaxExponent = 100000;

  /// Integer value of an exponent tower; throws std::invalid_argument when the
  /// expression is not a literal tower or its value is not an integer in range.
  static Integer exponent_value(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Integer:
        return e.value();
      case ExprKind::Neg:
        return -exponent_value(e.lhs());
      case ExprKind::Pow: {
        if (e.lhs().kind() != ExprKind::Integer) {
          throw std::invalid_argument("exponent tower base must be an integer literal");
        }
        const Integer& base = e.lhs().value();
        const Integer power = exponent_value(e.rhs());
        if (power < 0) {
          if (base == 1) return 1;
          throw std::invalid_argument("exponent must evaluate to an integer");
        }
        if (base <= 1) return base == 0 ? Integer(power == 0 ? 1 : 0) : Integer(1);
        if (power > kMaxExponent) throw std::invalid_argument("exponent out of range");
        Integer out;
        mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), power.get_ui());
        if (abs(out) > kMaxExponent) throw std::invalid_argument("exponent out of range");
        return out;
      }
      default:
        throw std::invalid_argument("exponent must be an integer literal");
    }
  }

 private:
  struct Node {
    ExprKind kind;
    Integer value;
    std::vector<Expr> children;
  };

  Expr(ExprKind kind, Integer value, std::vector<Expr> children)
      : node_(std::make_shared<const Node>(Node{kind, std::move(value), std::move(children)})) {}

  static Expr binary(ExprKind kind, Expr lhs, Expr rhs) {
    return Expr(kind, Integer(0), {std::move(lhs), std::move(rhs)});
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "empty expression");
    Expr e = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      if (text_[pos_] == ')') throw SyntaxError(pos_, "unbalanced ')'");
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  static constexpr int kMaxNesting = 256;

  struct DepthGuard {
    DepthGuard(int& depth, std::size_t pos) : depth_(depth) {
      if (++depth_ > kMaxNesting) throw SyntaxError(pos, "expression nested too deeply");
    }
    ~DepthGuard() { --depth_; }
    int& depth_;
  };

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::add(std::move(lhs), term());
      } else if (accept('-')) {
        lhs = Expr::sub(std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::mul(std::move(lhs), factor());
      } else if (accept('/')) {
        lhs = Expr::div(std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  Expr factor() {
    DepthGuard guard(depth_, pos_);
    if (accept('-')) return Expr::negate(factor());
    Expr b = base();
    if (accept('^')) {
      const std::size_t at = pos_;
      Expr e = exponent();
      try {
        return Expr::power(std::move(b), std::move(e));
      } catch (const std::invalid_argument& err) {
        throw SyntaxError(at, err.what());
      }
    }
    return b;
  }

  // exponent := '-' exponent | intlit ('^' exponent)?
  Expr exponent() {
    DepthGuard guard(depth_, pos_);
    if (accept('-')) return Expr::negate(exponent());
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw SyntaxError(pos_, "exponent must be an integer literal");
    }
    Expr lit = integer();
    if (accept('^')) {
      const std::size_t at = pos_;
      Expr rest = exponent();
      try {
        return Expr::power(std::move(lit), std::move(rest));
      } catch (const std::invalid_argument& err) {
        throw SyntaxError(at, err.what());
      }
    }
    return lit;
  }

  Expr base() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (c == '(') {
      const std::size_t open = pos_++;
      Expr inner = expr();
      if (!accept(')')) {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(open, "unbalanced '('");
        throw SyntaxError(pos_, "expected ')'");
      }
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name != "i") throw SyntaxError(start, "unknown identifier '" + std::string(name) + "'");
      return Expr::index();
    }
    if (c == ')') throw SyntaxError(pos_, "unbalanced ')'");
    throw SyntaxError(pos_, "unexpected '" + std::string(1, c) + "'");
  }

  Expr integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Expr::literal(Integer(std::string(text_.substr(start, pos_ - start)), 10));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

inline int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Neg:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

inline void print_into(const Expr& e, int min_prec, std::string& out) {
  const bool paren = precedence(e.kind()) < min_prec;
  if (paren) out += '(';
  switch (e.kind()) {
    case ExprKind::Integer:
      out += e.value().get_str(10);
      break;
    case ExprKind::Index:
      out += 'i';
      break;
    case ExprKind::Neg:
      out += '-';
      print_into(e.lhs(), 3, out);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print_into(e.lhs(), 1, out);
      out += e.kind() == ExprKind::Add ? '+' : '-';
      print_into(e.rhs(), 2, out);
      break;
    case ExprKind::Mul:
    case ExprKind::Div:
      print_into(e.lhs(), 2, out);
      out += e.kind() == ExprKind::Mul ? '*' : '/';
      print_into(e.rhs(), 3, out);
      break;
    case ExprKind::Pow:
      print_into(e.lhs(), 5, out);
      out += '^';
      print_into(e.rhs(), 3, out);
      break;
  }
  if (paren) out += ')';
}

inline Rational pow_rational(const Rational& base, const Integer& exponent, std::uint64_t index) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw DivisionByZero(index);
    return Rational(0);
  }
  const unsigned long e = Integer(abs(exponent)).get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational out = exponent > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();
  return out;
}

}  // namespace detail

/// Parses the sequence-expression grammar:
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | base ('^' exponent)?
///   base   := intlit | 'i' | '(' expr ')'
///
/// where an exponent is an integer literal, optionally negated, optionally
/// raised to a further exponent (`^` is right-associative).
inline Expr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Minimally parenthesized text; parse_expr(print_expr(e)) == e.
inline std::string print_expr(const Expr& e) {
  std::string out;
  detail::print_into(e, 0, out);
  return out;
}

/// Exact value at index i; DivisionByZero(i) if any divisor vanishes.
inline Rational evaluate(const Expr& e, std::uint64_t index) {
  switch (e.kind()) {
    case ExprKind::Integer:
      return Rational(e.value());
    case ExprKind::Index:
      return Rational(Integer(std::to_string(index), 10));
    case ExprKind::Neg:
      return -evaluate(e.lhs(), index);
    case ExprKind::Add:
      return evaluate(e.lhs(), index) + evaluate(e.rhs(), index);
    case ExprKind::Sub:
      return evaluate(e.lhs(), index) - evaluate(e.rhs(), index);
    case ExprKind::Mul:
      return evaluate(e.lhs(), index) * evaluate(e.rhs(), index);
    case ExprKind::Div: {
      Rational divisor = evaluate(e.rhs(), index);
      if (divisor == 0) throw DivisionByZero(index);
      return evaluate(e.lhs(), index) / divisor;
    }
    case ExprKind::Pow:
      return detail::pow_rational(evaluate(e.lhs(), index), Expr::exponent_value(e.rhs()), index);
  }
  throw std::logic_error("unreachable expression kind");
}

/// True if the variable `i` occurs anywhere in e.
inline bool depends_on_index(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Index:
      return true;
    case ExprKind::Integer:
      return false;
    case ExprKind::Neg:
      return depends_on_index(e.lhs());
    case ExprKind::Pow:
      return depends_on_index(e.lhs());
    default:
      return depends_on_index(e.lhs()) || depends_on_index(e.rhs());
  }
}

}  // namespace nestrad
