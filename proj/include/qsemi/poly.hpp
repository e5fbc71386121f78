#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qsemi/errors.hpp"
#include "qsemi/scalar.hpp"

namespace qsemi {

/// Dense polynomial in x over the scalar field; coefficient k multiplies x^k.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, int k);
  static Poly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int k) const;
  const Scalar& lc() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Scalar operator()(const Scalar& at) const;
  Poly monic() const;
  /// Maps every coefficient through t -> value.
  Poly evaluate_at(const mpq_class& t) const;
  Poly in_mode(Mode m) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// f(a x + b).
Poly compose_linear(const Poly& f, const Scalar& a, const Scalar& b);

struct DivMod {
  Poly quotient;
  Poly remainder;
};
DivMod divmod(const Poly& f, const Poly& g);

/// Raised by exact_div when the divisor leaves a remainder.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(Poly remainder);
  const Poly& remainder() const { return remainder_; }

 private:
  Poly remainder_;
};

Poly exact_div(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) is rejected.
Poly gcd(const Poly& f, const Poly& g);
Poly pow(const Poly& f, int e);

std::string format_poly(const Poly& p);

}  // namespace qsemi
