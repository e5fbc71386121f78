#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "qsemi/int_poly.hpp"

namespace qsemi {

/// Element of Q(t) stored as a reduced quotient of integer polynomials.
/// Numerator and denominator are coprime in Z[t] (integer content included)
/// and the denominator has a positive leading coefficient.
class RatFunc {
 public:
  RatFunc() : num_(), den_(IntPoly::constant(1)) {}
  explicit RatFunc(const mpq_class& c);
  static RatFunc make(IntPoly num, IntPoly den);
  static RatFunc generator();
  /// c * t^k for any integer k.
  static RatFunc laurent_monomial(const mpq_class& c, int k);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  mpq_class constant_value() const;

  /// If the value is c * t^k, returns k together with c.
  std::optional<std::pair<int, mpq_class>> as_laurent_monomial() const;

  mpq_class evaluate(const mpq_class& t) const;

  RatFunc operator-() const;
  RatFunc inverse() const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  RatFunc(IntPoly num, IntPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  IntPoly num_;
  IntPoly den_;
};

}  // namespace qsemi
