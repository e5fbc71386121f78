#include "qsemi/poly.hpp"

#include <utility>

namespace qsemi {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, int k) {
  if (c.is_zero()) return Poly();
  std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar::in_mode(0, c.mode()));
  if (!c.is_typed()) v.assign(static_cast<std::size_t>(k) + 1, Scalar(0));
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1, 1); }

Scalar Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
  return c_[static_cast<std::size_t>(k)];
}

const Scalar& Poly::lc() const {
  if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] != b.c_[i]) return false;
  return true;
}

Scalar Poly::operator()(const Scalar& at) const {
  Scalar acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = lc().inverse();
  Poly p = *this * inv;
  return p;
}

Poly Poly::evaluate_at(const mpq_class& t) const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.evaluate_at(t));
  return Poly(std::move(v));
}

Poly Poly::in_mode(Mode m) const {
  std::vector<Scalar> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(Scalar::in_mode(c, m));
  return Poly(std::move(v));
}

Poly compose_linear(const Poly& f, const Scalar& a, const Scalar& b) {
  // Horner in the variable (a x + b).
  Poly lin(std::vector<Scalar>{b, a});
  Poly acc;
  for (int k = f.degree(); k >= 0; --k) acc = acc * lin + Poly::constant(f.coeff(k));
  return acc;
}

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Scalar> r = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) return {Poly(), f};
  std::vector<Scalar> q(static_cast<std::size_t>(f.degree() - dg + 1));
  Scalar inv = g.lc().inverse();
  for (int k = f.degree() - dg; k >= 0; --k) {
    Scalar top = r[static_cast<std::size_t>(k + dg)];
    if (top.is_zero()) continue;
    Scalar m = top * inv;
    q[static_cast<std::size_t>(k)] = m;
    for (int j = 0; j <= dg; ++j) {
      const Scalar& gj = g.coeffs()[static_cast<std::size_t>(j)];
      if (!gj.is_zero()) r[static_cast<std::size_t>(k + j)] -= m * gj;
    }
    r[static_cast<std::size_t>(k + dg)] = Scalar(0);
  }
  r.resize(static_cast<std::size_t>(dg));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

InexactDivision::InexactDivision(Poly remainder)
    : Error("polynomial division is not exact; remainder " + format_poly(remainder)),
      remainder_(std::move(remainder)) {}

Poly exact_div(const Poly& f, const Poly& g) {
  DivMod dm = divmod(f, g);
  if (!dm.remainder.is_zero()) throw InexactDivision(dm.remainder);
  return dm.quotient;
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
  Poly a = f, b = g;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Poly pow(const Poly& f, int e) {
  if (e < 0) throw PreconditionError("negative power of a polynomial");
  Poly r = Poly::constant(1), base = f;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (c.is_one() && k > 0) {
      out += mono;
    } else {
      out += "(" + format_scalar(c) + ")";
      if (k > 0) out += "*" + mono;
    }
  }
  return out;
}

}  // namespace qsemi
