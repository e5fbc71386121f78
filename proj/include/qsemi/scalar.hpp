#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "qsemi/rat_func.hpp"

namespace qsemi {

enum class Mode { Rational, Symbolic };

std::string to_string(Mode m);

/// Exact field element: either a rational number or an element of Q(t).
///
/// Values built from plain integers or rationals are untyped constants and
/// combine with either mode. Typed rational values and symbolic values never
/// mix; attempting it throws ModeMismatch.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)), typed_(false) {}
  Scalar(long v) : v_(mpq_class(v)), typed_(false) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(static_cast<long>(v)) {}      // NOLINT(google-explicit-constructor)

  static Scalar constant(const mpq_class& v);
  static Scalar rational(const mpq_class& v);
  static Scalar symbolic(RatFunc v);
  static Scalar generator();
  /// Converts an untyped constant (or a value of the same mode) into mode m.
  static Scalar in_mode(const Scalar& s, Mode m);

  bool is_typed() const { return typed_; }
  bool is_symbolic() const { return std::holds_alternative<RatFunc>(v_); }
  Mode mode() const { return is_symbolic() ? Mode::Symbolic : Mode::Rational; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (no t dependence).
  bool is_rational_constant() const;
  mpq_class rational_value() const;
  const RatFunc& ratfunc() const;
  RatFunc as_ratfunc() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(int e) const;

  Scalar& operator+=(const Scalar& b);
  Scalar& operator-=(const Scalar& b);
  Scalar& operator*=(const Scalar& b);
  Scalar& operator/=(const Scalar& b);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Specialization t -> value; the result is a typed rational.
  Scalar evaluate_at(const mpq_class& t) const;

  std::string to_string() const;

 private:
  std::variant<mpq_class, RatFunc> v_;
  bool typed_;
};

std::string format_scalar(const Scalar& s);

}  // namespace qsemi
