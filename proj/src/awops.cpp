#include "qsemi/awops.hpp"

#include <deque>

#include "qsemi/context_state.hpp"
#include "qsemi/sym_laurent.hpp"

namespace qsemi {

namespace detail {

struct MonomialImages {
  std::mutex mutex;
  std::deque<Poly> dq;
  std::deque<Poly> sq;
};

}  // namespace detail

namespace {

void require_aw(const QContext& ctx) {
  if (ctx.kind() != OperatorKind::AskeyWilson)
    throw PreconditionError("Askey-Wilson operators need an Askey-Wilson context");
}

struct Shifts {
  LaurentSplit up;    // z -> t z
  LaurentSplit down;  // z -> z / t
};

Shifts both_shifts(const SymLaurent& g, const QContext& ctx) {
  std::vector<Scalar> pos(g.c.size()), neg(g.c.size());
  for (std::size_t k = 0; k < g.c.size(); ++k) {
    pos[k] = ctx.t_pow(static_cast<int>(k));
    neg[k] = ctx.t_pow(-static_cast<int>(k));
  }
  return {shift_z(g, pos, neg), shift_z(g, neg, pos)};
}

detail::MonomialImages& images(const QContext& ctx) {
  auto& st = ctx.state();
  std::lock_guard<std::mutex> lock(st.mutex);
  if (!st.images) st.images = std::make_shared<detail::MonomialImages>();
  return *st.images;
}

}  // namespace

StructuralPolys structural_polys(const QContext& ctx) {
  require_aw(ctx);
  Scalar lead = ctx.alpha() * ctx.alpha() - 1;
  return {Poly::monomial(lead, 1), Poly(std::vector<Scalar>{-lead, ctx.zero(), lead})};
}

Poly dq(const Poly& f, const QContext& ctx) {
  require_aw(ctx);
  if (f.degree() <= 0) return Poly();
  Shifts s = both_shifts(to_symlaurent(f), ctx);
  AntiLaurent diff;
  const std::size_t m = std::max(s.up.antisymmetric.d.size(), s.down.antisymmetric.d.size());
  diff.d.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    Scalar a = k < s.up.antisymmetric.d.size() ? s.up.antisymmetric.d[k] : Scalar(0);
    Scalar b = k < s.down.antisymmetric.d.size() ? s.down.antisymmetric.d[k] : Scalar(0);
    diff.d[k] = a - b;
  }
  diff.trim();
  Scalar scale = Scalar(2) / (ctx.t_pow(1) - ctx.t_pow(-1));
  return from_symlaurent(divide_antisym(diff)) * scale;
}

Poly sq(const Poly& f, const QContext& ctx) {
  require_aw(ctx);
  if (f.degree() <= 0) return f;
  Shifts s = both_shifts(to_symlaurent(f), ctx);
  SymLaurent avg;
  const std::size_t m = std::max(s.up.symmetric.c.size(), s.down.symmetric.c.size());
  avg.c.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    Scalar a = k < s.up.symmetric.c.size() ? s.up.symmetric.c[k] : Scalar(0);
    Scalar b = k < s.down.symmetric.c.size() ? s.down.symmetric.c[k] : Scalar(0);
    avg.c[k] = (a + b) / 2;
  }
  avg.trim();
  return from_symlaurent(avg);
}

const Poly& dq_monomial(int n, const QContext& ctx) {
  auto& img = images(ctx);
  std::lock_guard<std::mutex> lock(img.mutex);
  while (static_cast<int>(img.dq.size()) <= n) {
    int k = static_cast<int>(img.dq.size());
    img.dq.push_back(dq(Poly::monomial(ctx.one(), k), ctx));
  }
  return img.dq[static_cast<std::size_t>(n)];
}

const Poly& sq_monomial(int n, const QContext& ctx) {
  auto& img = images(ctx);
  std::lock_guard<std::mutex> lock(img.mutex);
  while (static_cast<int>(img.sq.size()) <= n) {
    int k = static_cast<int>(img.sq.size());
    img.sq.push_back(sq(Poly::monomial(ctx.one(), k), ctx));
  }
  return img.sq[static_cast<std::size_t>(n)];
}

Poly dq_via_table(const Poly& f, const QContext& ctx) {
  Poly out;
  for (int k = 1; k <= f.degree(); ++k)
    if (!f.coeff(k).is_zero()) out += dq_monomial(k, ctx) * f.coeff(k);
  return out;
}

Poly sq_via_table(const Poly& f, const QContext& ctx) {
  Poly out;
  for (int k = 0; k <= f.degree(); ++k)
    if (!f.coeff(k).is_zero()) out += sq_monomial(k, ctx) * f.coeff(k);
  return out;
}

}  // namespace qsemi
