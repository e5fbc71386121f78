#include "qsemi/int_poly.hpp"

#include <algorithm>
#include <utility>

#include "qsemi/errors.hpp"

namespace qsemi {

namespace {

constexpr std::size_t kKroneckerThreshold = 12;
constexpr int kHeuristicAttempts = 6;

std::size_t bit_length(std::size_t v) {
  std::size_t n = 0;
  while (v != 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

}  // namespace

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  if (c == 0) return IntPoly();
  std::vector<mpz_class> v(k + 1);
  v[k] = c;
  IntPoly p;
  p.c_ = std::move(v);
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

std::size_t IntPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

bool IntPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    if (*it == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), it->get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::size_t IntPoly::max_bits() const {
  std::size_t m = 0;
  for (const auto& c : c_) m = std::max(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<mpz_class> v(k + c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
  IntPoly p;
  p.c_ = std::move(v);
  return p;
}

IntPoly IntPoly::shifted_down(std::size_t k) const {
  if (k == 0) return *this;
  if (k > c_.size()) return IntPoly();
  for (std::size_t i = 0; i < k; ++i)
    if (c_[i] != 0) throw PreconditionError("shifted_down would drop a nonzero coefficient");
  IntPoly p;
  p.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
  return p;
}

IntPoly IntPoly::scaled(const mpz_class& m) const {
  if (m == 0) return IntPoly();
  IntPoly p = *this;
  for (auto& c : p.c_) c *= m;
  return p;
}

IntPoly IntPoly::divided_exact(const mpz_class& m) const {
  IntPoly p = *this;
  for (auto& c : p.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  return p;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

mpq_class IntPoly::evaluate(const mpq_class& t) const {
  if (c_.empty()) return 0;
  const mpz_class& a = t.get_num();
  const mpz_class& b = t.get_den();
  mpz_class acc = c_.back();
  mpz_class bpow = 1;
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + c_[i] * bpow;
  }
  mpq_class r(acc, bpow);
  r.canonicalize();
  return r;
}

mpz_class IntPoly::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= t;
    acc += c_[i];
  }
  return acc;
}

std::string IntPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

IntPoly multiply_schoolbook(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<mpz_class> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

namespace {

// Packs sum c_i 2^(slot*i) with signed c_i into a single integer.
mpz_class kronecker_pack(const IntPoly& p, std::size_t limbs) {
  std::vector<mp_limb_t> pos(p.size() * limbs, 0), neg(p.size() * limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const mpz_class& c = p[i];
    int sg = sgn(c);
    if (sg == 0) continue;
    std::size_t count = 0;
    mp_limb_t* dst = (sg > 0 ? pos.data() : neg.data()) + i * limbs;
    mpz_export(dst, &count, -1, sizeof(mp_limb_t), 0, 0, c.get_mpz_t());
    if (sg < 0) any_neg = true;
  }
  mpz_class x;
  mpz_import(x.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (any_neg) {
    mpz_class y;
    mpz_import(y.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0, 0, neg.data());
    x -= y;
  }
  return x;
}

}  // namespace

IntPoly multiply_kronecker(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  const std::size_t len = a.size() + b.size() - 1;
  const std::size_t bits =
      a.max_bits() + b.max_bits() + bit_length(std::min(a.size(), b.size())) + 2;
  const std::size_t limb_bits = sizeof(mp_limb_t) * 8;
  const std::size_t limbs = (bits + limb_bits - 1) / limb_bits;
  const std::size_t slot = limbs * limb_bits;

  mpz_class z = kronecker_pack(a, limbs) * kronecker_pack(b, limbs);
  const int sign = sgn(z);
  if (sign == 0) return IntPoly();
  std::vector<mp_limb_t> buf(len * limbs + 1, 0);
  std::size_t count = 0;
  mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, z.get_mpz_t());

  mpz_class half, full, carry = 0, v;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, slot);
  half = full / 2;
  std::vector<mpz_class> out(len);
  for (std::size_t i = 0; i < len; ++i) {
    mpz_import(v.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    v += carry;
    if (v >= half) {
      v -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = sign > 0 ? v : mpz_class(-v);
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  if (a.size() == 1) return b.scaled(a[0]);
  if (b.size() == 1) return a.scaled(b[0]);
  if (std::min(a.size(), b.size()) >= kKroneckerThreshold) return multiply_kronecker(a, b);
  return multiply_schoolbook(a, b);
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return IntPoly();
  if (a.degree() < b.degree()) return std::nullopt;
  if (b.size() == 1) {
    for (const auto& c : a.coeffs())
      if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
    return a.divided_exact(b[0]);
  }
  std::vector<mpz_class> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  std::vector<mpz_class> q(a.size() - db);
  const mpz_class& lb = b.lc();
  const bool unit = (lb == 1 || lb == -1);
  for (std::size_t k = q.size(); k-- > 0;) {
    mpz_class& top = r[k + db];
    if (top == 0) continue;
    if (unit) {
      q[k] = lb == 1 ? top : mpz_class(-top);
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    }
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("pseudo-remainder by zero");
  std::vector<mpz_class> r = a.coeffs();
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.lc();
  while (!r.empty() && r.size() - 1 >= db) {
    mpz_class top = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c *= lb;
    for (std::size_t j = 0; j <= db; ++j)
      mpz_submul(r[shift + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

IntPoly primitive_part(const IntPoly& a) {
  if (a.is_zero()) return a;
  mpz_class c = a.content();
  if (a.lc() < 0) c = -c;
  return c == 1 ? a : a.divided_exact(c);
}

IntPoly gcd_primitive_prs(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

namespace {

mpz_class max_norm(const IntPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

IntPoly interpolate_balanced(mpz_class h, const mpz_class& x) {
  std::vector<mpz_class> out;
  mpz_class half = x / 2, g;
  while (h != 0) {
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    out.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return primitive_part(IntPoly(std::move(out)));
}

// Heuristic gcd of primitive polynomials of positive degree.
std::optional<IntPoly> gcd_heuristic(const IntPoly& f, const IntPoly& g) {
  mpz_class bound = 2 * std::min(max_norm(f), max_norm(g)) + 29;
  mpz_class x = bound;
  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    mpz_class ff = f.evaluate(x), gg = g.evaluate(x);
    if (ff != 0 && gg != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
      IntPoly cand = interpolate_balanced(h, x);
      if (!cand.is_zero() && divide_exact(f, cand) && divide_exact(g, cand)) return cand;
    }
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
    x = 73794 * x * s / 27011;
  }
  return std::nullopt;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : (b.lc() < 0 ? -b : b);
  if (b.is_zero()) return a.lc() < 0 ? -a : a;
  mpz_class ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const std::size_t k = std::min(a.order(), b.order());
  IntPoly pa = primitive_part(a).shifted_down(a.order());
  IntPoly pb = primitive_part(b).shifted_down(b.order());
  IntPoly g;
  if (pa.degree() == 0 || pb.degree() == 0) {
    g = IntPoly::constant(1);
  } else if (pa == pb) {
    g = pa;
  } else {
    auto h = gcd_heuristic(pa, pb);
    g = h ? *h : gcd_primitive_prs(pa, pb);
  }
  return g.scaled(c).shifted_up(k);
}

}  // namespace qsemi
