#include "qsemi/scalar.hpp"

#include <utility>

#include "qsemi/errors.hpp"

namespace qsemi {

std::string to_string(Mode m) { return m == Mode::Symbolic ? "symbolic" : "rational"; }

namespace {

enum class Kind { Untyped, Rational, Symbolic };

Kind kind_of(const Scalar& s) {
  if (s.is_symbolic()) return Kind::Symbolic;
  return s.is_typed() ? Kind::Rational : Kind::Untyped;
}

Kind combine(const Scalar& a, const Scalar& b) {
  Kind ka = kind_of(a), kb = kind_of(b);
  if (ka == Kind::Untyped) return kb;
  if (kb == Kind::Untyped) return ka;
  if (ka != kb) throw ModeMismatch("cannot combine rational and symbolic scalars");
  return ka;
}

}  // namespace

Scalar Scalar::constant(const mpq_class& v) {
  Scalar s;
  mpq_class c = v;
  c.canonicalize();
  s.v_ = c;
  return s;
}

Scalar Scalar::rational(const mpq_class& v) {
  Scalar s = constant(v);
  s.typed_ = true;
  return s;
}

Scalar Scalar::symbolic(RatFunc v) {
  Scalar s;
  s.v_ = std::move(v);
  s.typed_ = true;
  return s;
}

Scalar Scalar::generator() { return symbolic(RatFunc::generator()); }

Scalar Scalar::in_mode(const Scalar& s, Mode m) {
  if (s.is_typed() && s.mode() != m) throw ModeMismatch("scalar already carries the other mode");
  if (m == Mode::Symbolic) return symbolic(s.as_ratfunc());
  return rational(s.rational_value());
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
  return std::get<RatFunc>(v_).is_zero();
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  const RatFunc& r = std::get<RatFunc>(v_);
  return r.num().is_one() && r.den().is_one();
}

bool Scalar::is_rational_constant() const {
  if (std::holds_alternative<mpq_class>(v_)) return true;
  return std::get<RatFunc>(v_).is_constant();
}

mpq_class Scalar::rational_value() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  return std::get<RatFunc>(v_).constant_value();
}

const RatFunc& Scalar::ratfunc() const {
  if (auto* r = std::get_if<RatFunc>(&v_)) return *r;
  throw ModeMismatch("scalar is not symbolic");
}

RatFunc Scalar::as_ratfunc() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return RatFunc(*q);
  return std::get<RatFunc>(v_);
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto* q = std::get_if<mpq_class>(&s.v_))
    *q = -*q;
  else
    s.v_ = -std::get<RatFunc>(s.v_);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero scalar");
  Scalar s = *this;
  if (auto* q = std::get_if<mpq_class>(&s.v_))
    *q = 1 / *q;
  else
    s.v_ = std::get<RatFunc>(s.v_).inverse();
  return s;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar::in_mode(1, mode());
  if (!typed_) result = Scalar(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Kind k = combine(a, b);
  if (k == Kind::Symbolic) return Scalar::symbolic(a.as_ratfunc() + b.as_ratfunc());
  Scalar s = Scalar::constant(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_));
  s.typed_ = (k == Kind::Rational);
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Kind k = combine(a, b);
  if (k == Kind::Symbolic) return Scalar::symbolic(a.as_ratfunc() - b.as_ratfunc());
  Scalar s = Scalar::constant(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_));
  s.typed_ = (k == Kind::Rational);
  return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Kind k = combine(a, b);
  if (k == Kind::Symbolic) {
    if (a.is_zero() || b.is_zero()) return Scalar::symbolic(RatFunc());
    return Scalar::symbolic(a.as_ratfunc() * b.as_ratfunc());
  }
  Scalar s = Scalar::constant(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_));
  s.typed_ = (k == Kind::Rational);
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero scalar");
  Kind k = combine(a, b);
  if (k == Kind::Symbolic) return Scalar::symbolic(a.as_ratfunc() / b.as_ratfunc());
  Scalar s = Scalar::constant(std::get<mpq_class>(a.v_) / std::get<mpq_class>(b.v_));
  s.typed_ = (k == Kind::Rational);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& b) { return *this = *this + b; }
Scalar& Scalar::operator-=(const Scalar& b) { return *this = *this - b; }
Scalar& Scalar::operator*=(const Scalar& b) { return *this = *this * b; }
Scalar& Scalar::operator/=(const Scalar& b) { return *this = *this / b; }

bool operator==(const Scalar& a, const Scalar& b) {
  combine(a, b);
  if (a.is_symbolic() || b.is_symbolic()) return a.as_ratfunc() == b.as_ratfunc();
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

Scalar Scalar::evaluate_at(const mpq_class& t) const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return rational(*q);
  return rational(std::get<RatFunc>(v_).evaluate(t));
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::get<RatFunc>(v_).to_string();
}

std::string format_scalar(const Scalar& s) { return s.to_string(); }

}  // namespace qsemi
