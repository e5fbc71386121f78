#include "qsemi/expr_parser.hpp"

#include <cctype>

namespace qsemi {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const QContext& ctx) : s_(text), ctx_(ctx) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p.in_mode(ctx_.mode());
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = unary();
        if (d.degree() > 0) throw ParseError("division by a polynomial in x", at);
        if (d.is_zero()) throw DivisionByZero("division by zero in literal");
        acc *= d.lc().inverse();
      } else {
        return acc;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    long e = exponent();
    if (e >= 0) return pow(base, static_cast<int>(e));
    if (base.degree() > 0) fail("negative exponent on a polynomial in x");
    if (base.is_zero()) throw DivisionByZero("zero raised to a negative power");
    return Poly::constant(base.lc().pow(static_cast<int>(e)));
  }

  long exponent() {
    bool paren = accept('(');
    bool neg = accept('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    long v = std::stol(s_.substr(start, pos_ - start));
    if (paren && !accept(')')) fail("expected ')'");
    return neg ? -v : v;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      return Poly::constant(Scalar::constant(mpq_class(v)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return name(s_.substr(start, pos_ - start), start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Poly name(const std::string& id, std::size_t at) {
    const bool aw = ctx_.kind() == OperatorKind::AskeyWilson;
    if (id == "x") return Poly::x();
    if (id == "t") return Poly::constant(ctx_.t());
    if (id == "q") return Poly::constant(ctx_.q());
    if (id == "omega" && !aw) return Poly::constant(ctx_.omega());
    if (aw && (id == "alpha" || id == "U1" || id == "U2")) {
      Scalar a = ctx_.alpha();
      if (id == "alpha") return Poly::constant(a);
      Scalar lead = a * a - 1;
      if (id == "U1") return Poly::monomial(lead, 1);
      return Poly(std::vector<Scalar>{-lead, Scalar(0), lead});
    }
    throw ParseError("unknown name '" + id + "'", at);
  }

  const std::string& s_;
  const QContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const QContext& ctx) { return Parser(text, ctx).parse(); }

Scalar parse_scalar(const std::string& text, const QContext& ctx) {
  Poly p = parse_poly(text, ctx);
  if (p.degree() > 0) throw ParseError("scalar literal depends on x", 0);
  return ctx.lift(p.coeff(0));
}

}  // namespace qsemi
