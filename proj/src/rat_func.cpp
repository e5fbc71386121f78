#include "qsemi/rat_func.hpp"

#include <utility>

#include "qsemi/errors.hpp"

namespace qsemi {

namespace {

bool simple_den(const IntPoly& d) { return d.is_monomial(); }

}  // namespace

RatFunc::RatFunc(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  num_ = IntPoly::constant(v.get_num());
  den_ = IntPoly::constant(v.get_den());
}

RatFunc RatFunc::make(IntPoly num, IntPoly den) {
  RatFunc r(std::move(num), std::move(den), true);
  r.normalize();
  return r;
}

RatFunc RatFunc::generator() { return RatFunc(IntPoly::monomial(1, 1), IntPoly::constant(1), true); }

RatFunc RatFunc::laurent_monomial(const mpq_class& c, int k) {
  if (c == 0) return RatFunc();
  IntPoly n = IntPoly::constant(c.get_num()), d = IntPoly::constant(c.get_den());
  if (k >= 0)
    n = n.shifted_up(static_cast<std::size_t>(k));
  else
    d = d.shifted_up(static_cast<std::size_t>(-k));
  return make(std::move(n), std::move(d));
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  const std::size_t k = std::min(num_.order(), den_.order());
  if (k > 0) {
    num_ = num_.shifted_down(k);
    den_ = den_.shifted_down(k);
  }
  if (simple_den(den_)) {
    mpz_class g = den_.lc();
    for (auto it = num_.coeffs().rbegin(); it != num_.coeffs().rend() && abs(g) != 1; ++it)
      if (*it != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), it->get_mpz_t());
    g = abs(g);
    if (g != 1) {
      num_ = num_.divided_exact(g);
      den_ = den_.divided_exact(g);
    }
  } else {
    IntPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *divide_exact(num_, g);
      den_ = *divide_exact(den_, g);
    }
  }
  if (den_.lc() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

mpq_class RatFunc::constant_value() const {
  if (!is_constant()) throw PreconditionError("rational function is not constant");
  if (num_.is_zero()) return 0;
  mpq_class r(num_[0], den_[0]);
  r.canonicalize();
  return r;
}

std::optional<std::pair<int, mpq_class>> RatFunc::as_laurent_monomial() const {
  if (num_.is_zero() || !num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  mpq_class c(num_.lc(), den_.lc());
  c.canonicalize();
  return std::make_pair(num_.degree() - den_.degree(), c);
}

mpq_class RatFunc::evaluate(const mpq_class& t) const {
  mpq_class d = den_.evaluate(t);
  if (d == 0) throw DivisionByZero("evaluation at a pole of a rational function");
  return num_.evaluate(t) / d;
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

RatFunc RatFunc::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero");
  RatFunc r(den_, num_, true);
  if (r.den_.lc() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc::make(a.num_ + b.num_, a.den_);
  if (a.den_.is_constant() && b.den_.is_constant()) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.den_[0].get_mpz_t(), b.den_[0].get_mpz_t());
    IntPoly n = a.num_.scaled(l / a.den_[0]) + b.num_.scaled(l / b.den_[0]);
    return RatFunc::make(std::move(n), IntPoly::constant(l));
  }
  if (simple_den(a.den_) && simple_den(b.den_))
    return RatFunc::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  IntPoly g = gcd(a.den_, b.den_);
  IntPoly ca = *divide_exact(a.den_, g);
  IntPoly cb = *divide_exact(b.den_, g);
  return RatFunc::make(a.num_ * cb + b.num_ * ca, a.den_ * cb);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (simple_den(a.den_) && simple_den(b.den_))
    return RatFunc::make(a.num_ * b.num_, a.den_ * b.den_);
  // Cross-cancel first so the products are already coprime.
  IntPoly g1 = gcd(a.num_, b.den_);
  IntPoly g2 = gcd(b.num_, a.den_);
  IntPoly an = g1.is_one() ? a.num_ : *divide_exact(a.num_, g1);
  IntPoly bd = g1.is_one() ? b.den_ : *divide_exact(b.den_, g1);
  IntPoly bn = g2.is_one() ? b.num_ : *divide_exact(b.num_, g2);
  IntPoly ad = g2.is_one() ? a.den_ : *divide_exact(a.den_, g2);
  IntPoly n = an * bn, d = ad * bd;
  if (d.lc() < 0) {
    n = -n;
    d = -d;
  }
  return RatFunc(std::move(n), std::move(d), true);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::size_t terms = 0;
  for (const auto& c : num_.coeffs())
    if (c != 0) ++terms;
  std::string n = num_.to_string();
  if (terms > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.degree() > 0) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qsemi
