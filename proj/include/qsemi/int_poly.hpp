#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qsemi {

/// Dense polynomial in t with arbitrary-precision integer coefficients,
/// stored little-endian. The zero polynomial has an empty coefficient list.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  mpz_class coeff(std::size_t i) const;
  const mpz_class& lc() const { return c_.back(); }

  /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
  std::size_t order() const;
  bool is_monomial() const;
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  /// Nonnegative gcd of the coefficients.
  mpz_class content() const;
  std::size_t max_bits() const;

  IntPoly shifted_up(std::size_t k) const;
  IntPoly shifted_down(std::size_t k) const;
  IntPoly scaled(const mpz_class& m) const;
  /// Divides every coefficient by m, which must divide them all.
  IntPoly divided_exact(const mpz_class& m) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);

  mpq_class evaluate(const mpq_class& t) const;
  mpz_class evaluate(const mpz_class& t) const;

  std::string to_string(const char* var = "t") const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b);
/// Multiplication by packing both operands into big integers.
IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b);

/// Exact division over Z[t]; nullopt when b does not divide a with an
/// integer quotient.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
IntPoly primitive_part(const IntPoly& a);

/// Full gcd in Z[t] (content included), with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Gcd of primitive polynomials via the primitive remainder sequence.
IntPoly gcd_primitive_prs(IntPoly a, IntPoly b);

}  // namespace qsemi
