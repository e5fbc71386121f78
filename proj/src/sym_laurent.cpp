#include "qsemi/sym_laurent.hpp"

namespace qsemi {

namespace {

bool same_trimmed(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    Scalar x = i < a.size() ? a[i] : Scalar(0);
    Scalar y = i < b.size() ? b[i] : Scalar(0);
    if (x != y) return false;
  }
  return true;
}

void trim_vec(std::vector<Scalar>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

}  // namespace

void SymLaurent::trim() { trim_vec(c); }
void AntiLaurent::trim() { trim_vec(d); }

bool operator==(const SymLaurent& a, const SymLaurent& b) { return same_trimmed(a.c, b.c); }
bool operator==(const AntiLaurent& a, const AntiLaurent& b) { return same_trimmed(a.d, b.d); }

SymLaurent to_symlaurent(const Poly& f) {
  SymLaurent acc;
  for (int k = f.degree(); k >= 0; --k) {
    // acc <- x * acc + f_k
    const std::size_t m = acc.c.size();
    std::vector<Scalar> next(m + 1);
    for (std::size_t j = 0; j < m; ++j) {
      const Scalar& cj = acc.c[j];
      if (cj.is_zero()) continue;
      if (j == 0) {
        next[1] += cj / 2;
      } else {
        Scalar h = cj / 2;
        next[j + 1] += h;
        if (j == 1)
          next[0] += cj;
        else
          next[j - 1] += h;
      }
    }
    next[0] += f.coeff(k);
    acc.c = std::move(next);
    acc.trim();
  }
  return acc;
}

Poly from_symlaurent(const SymLaurent& g) {
  if (g.c.empty()) return Poly();
  // z^k + z^-k = 2 T_k(x).
  Poly result = Poly::constant(g.c[0]);
  Poly prev = Poly::constant(1), cur = Poly::x();
  const Poly two_x = Poly::monomial(2, 1);
  for (std::size_t k = 1; k < g.c.size(); ++k) {
    if (!g.c[k].is_zero()) result += cur * (g.c[k] * 2);
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return result;
}

LaurentSplit shift_z(const SymLaurent& g, const std::vector<Scalar>& pos_pows,
                     const std::vector<Scalar>& neg_pows) {
  LaurentSplit out;
  const std::size_t m = g.c.size();
  out.symmetric.c.resize(m);
  out.antisymmetric.d.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Scalar& ck = g.c[k];
    if (ck.is_zero()) continue;
    if (k == 0) {
      out.symmetric.c[0] = ck;
      continue;
    }
    Scalar hp = ck * pos_pows[k], hn = ck * neg_pows[k];
    out.symmetric.c[k] = (hp + hn) / 2;
    out.antisymmetric.d[k] = (hp - hn) / 2;
  }
  out.symmetric.trim();
  out.antisymmetric.trim();
  return out;
}

LaurentSplit shift_z(const SymLaurent& g, const Scalar& a) {
  std::vector<Scalar> pos(g.c.size()), neg(g.c.size());
  Scalar inv = a.inverse(), p = Scalar(1), n = Scalar(1);
  for (std::size_t k = 0; k < g.c.size(); ++k) {
    pos[k] = p;
    neg[k] = n;
    p *= a;
    n *= inv;
  }
  return shift_z(g, pos, neg);
}

SymLaurent divide_antisym(const AntiLaurent& g) {
  // (z^k - z^-k)/(z - 1/z) = z^(k-1) + z^(k-3) + ... + z^-(k-1), so
  // c_j collects d_k for every k > j with k - j odd.
  SymLaurent out;
  const std::size_t m = g.d.size();
  if (m <= 1) return out;
  out.c.resize(m - 1);
  Scalar suffix_even, suffix_odd;  // sums of d_k over k > j by parity of k
  for (std::size_t j = m - 1; j-- > 0;) {
    const std::size_t k = j + 1;
    if (k < m && !g.d[k].is_zero()) (k % 2 == 0 ? suffix_even : suffix_odd) += g.d[k];
    out.c[j] = (j % 2 == 0) ? suffix_odd : suffix_even;
  }
  out.trim();
  return out;
}

AntiLaurent times_z_minus_inverse(const SymLaurent& g) {
  AntiLaurent out;
  const std::size_t m = g.c.size();
  if (m == 0) return out;
  out.d.resize(m + 1);
  out.d[1] += g.c[0];
  for (std::size_t k = 1; k < m; ++k) {
    out.d[k + 1] += g.c[k];
    if (k >= 2) out.d[k - 1] -= g.c[k];
  }
  out.trim();
  return out;
}

}  // namespace qsemi
