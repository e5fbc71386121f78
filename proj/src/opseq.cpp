#include "qsemi/opseq.hpp"

#include <algorithm>

namespace qsemi {

OPSFamily OPSFamily::build(const FamilySpec& spec, int n_max, const QContext& ctx) {
  if (n_max < 0) throw PreconditionError("family degree must be nonnegative");
  if (spec.available >= 0 && n_max > spec.available)
    throw PreconditionError("family '" + spec.name + "' has coefficients only up to n = " +
                            std::to_string(spec.available));
  OPSFamily fam(ctx);
  fam.name_ = spec.name;
  fam.params_ = spec.params;
  fam.B_.reserve(static_cast<std::size_t>(n_max + 1));
  fam.C_.assign(1, ctx.zero());
  fam.h_.assign(1, ctx.one());
  for (int n = 0; n <= n_max; ++n) fam.B_.push_back(ctx.lift(spec.B(n)));
  for (int n = 1; n <= n_max; ++n) {
    Scalar c = ctx.lift(spec.C(n));
    if (c.is_zero()) throw NotRegular("recurrence coefficient C_n vanishes", n);
    fam.C_.push_back(c);
    fam.h_.push_back(fam.h_.back() * c);
  }
  fam.P_.reserve(static_cast<std::size_t>(n_max + 1));
  fam.P_.push_back(Poly::constant(ctx.one()));
  if (n_max >= 1) fam.P_.push_back(Poly(std::vector<Scalar>{-fam.B_[0], ctx.one()}));
  for (int n = 1; n < n_max; ++n) {
    const Poly& pn = fam.P_[static_cast<std::size_t>(n)];
    Poly next = Poly::x() * pn - pn * fam.B_[static_cast<std::size_t>(n)] -
                fam.P_[static_cast<std::size_t>(n - 1)] * fam.C_[static_cast<std::size_t>(n)];
    fam.P_.push_back(std::move(next));
  }
  return fam;
}

const Scalar& OPSFamily::B(int n) const {
  if (n < 0 || n >= static_cast<int>(B_.size()))
    throw PreconditionError("B_" + std::to_string(n) + " outside the built range");
  return B_[static_cast<std::size_t>(n)];
}

Scalar OPSFamily::C(int n) const {
  if (n <= 0) return ctx_.zero();
  if (n >= static_cast<int>(C_.size()))
    throw PreconditionError("C_" + std::to_string(n) + " outside the built range");
  return C_[static_cast<std::size_t>(n)];
}

const Poly& OPSFamily::P(int n) const {
  static const Poly zero;
  if (n == -1) return zero;
  if (n < -1 || n > degree())
    throw PreconditionError("P_" + std::to_string(n) + " outside the built range");
  return P_[static_cast<std::size_t>(n)];
}

const Scalar& OPSFamily::norm(int n) const {
  if (n < 0 || n > degree())
    throw PreconditionError("h_" + std::to_string(n) + " outside the built range");
  return h_[static_cast<std::size_t>(n)];
}

LinearForm moments(const OPSFamily& fam, int m) {
  if ((m + 1) / 2 > fam.degree())
    throw PreconditionError("moments up to " + std::to_string(m) + " need the family built to " +
                            std::to_string((m + 1) / 2));
  const QContext& ctx = fam.context();
  std::vector<Scalar> out(static_cast<std::size_t>(m + 1));
  // v holds x^n in the P-basis; components above m - n cannot return to P_0.
  std::vector<Scalar> v{ctx.one()};
  out[0] = ctx.one();
  for (int n = 1; n <= m; ++n) {
    const int keep = std::min(n, m - n);
    std::vector<Scalar> next(static_cast<std::size_t>(keep + 1));
    for (int k = 0; k < static_cast<int>(v.size()); ++k) {
      const Scalar& vk = v[static_cast<std::size_t>(k)];
      if (vk.is_zero()) continue;
      if (k + 1 <= keep) next[static_cast<std::size_t>(k + 1)] += vk;
      if (k <= keep && !fam.B(k).is_zero()) next[static_cast<std::size_t>(k)] += fam.B(k) * vk;
      if (k >= 1 && k - 1 <= keep) next[static_cast<std::size_t>(k - 1)] += fam.C(k) * vk;
    }
    v = std::move(next);
    out[static_cast<std::size_t>(n)] = ctx.lift(v[0]);
  }
  return LinearForm(std::move(out));
}

std::vector<Scalar> expand_in_basis(const Poly& f, const OPSFamily& fam) {
  if (f.degree() > fam.degree())
    throw PreconditionError("expansion of degree " + std::to_string(f.degree()) +
                            " needs the family built that far");
  const QContext& ctx = fam.context();
  std::vector<Scalar> v(static_cast<std::size_t>(std::max(f.degree() + 1, 0)), ctx.zero());
  std::vector<Scalar> r = f.coeffs();
  for (int d = f.degree(); d >= 0; --d) {
    Scalar top = r[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    v[static_cast<std::size_t>(d)] = ctx.lift(top);
    const Poly& pd = fam.P(d);
    for (int k = 0; k < d; ++k) {
      const Scalar& c = pd.coeffs()[static_cast<std::size_t>(k)];
      if (!c.is_zero()) r[static_cast<std::size_t>(k)] -= top * c;
    }
  }
  return v;
}

Recurrence recurrence_from_moments(const LinearForm& u, int n_max) {
  if (u.valid_degree() < 2 * n_max + 1)
    throw DegreeOverflow(2 * n_max + 1, u.valid_degree());
  const int L = 2 * n_max + 2;
  Recurrence rec;
  // sigma[k][l] = <u, Q_k x^l> for the monic orthogonal Q_k.
  std::vector<Scalar> prev(static_cast<std::size_t>(L)), cur(static_cast<std::size_t>(L));
  for (int l = 0; l < L; ++l) cur[static_cast<std::size_t>(l)] = u.moment(l);
  if (cur[0].is_zero()) throw NotRegular("form not regular to requested depth", 0);
  rec.B.push_back(cur[1] / cur[0]);
  rec.C.push_back(Scalar(0));
  for (int k = 1; k <= n_max; ++k) {
    std::vector<Scalar> next(static_cast<std::size_t>(L));
    const Scalar& a = rec.B.back();
    const Scalar& b = rec.C.back();
    for (int l = k; l < L - k; ++l) {
      Scalar v = cur[static_cast<std::size_t>(l + 1)] - a * cur[static_cast<std::size_t>(l)];
      if (k >= 2) v -= b * prev[static_cast<std::size_t>(l)];
      next[static_cast<std::size_t>(l)] = v;
    }
    const Scalar& hk = next[static_cast<std::size_t>(k)];
    if (hk.is_zero()) throw NotRegular("form not regular to requested depth", k);
    const Scalar& hk1 = cur[static_cast<std::size_t>(k - 1)];
    rec.B.push_back(next[static_cast<std::size_t>(k + 1)] / hk -
                    cur[static_cast<std::size_t>(k)] / hk1);
    rec.C.push_back(hk / hk1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return rec;
}

}  // namespace qsemi
