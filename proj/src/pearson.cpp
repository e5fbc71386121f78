#include "qsemi/pearson.hpp"

#include <algorithm>

#include "qsemi/awops.hpp"
#include "qsemi/scan.hpp"

namespace qsemi {

namespace {

void require_aw(const QContext& ctx, const char* what) {
  if (ctx.kind() != OperatorKind::AskeyWilson)
    throw PreconditionError(std::string(what) + " needs an Askey-Wilson context");
}

Poly shifted(const Poly& f, int n) {
  if (f.is_zero()) return f;
  std::vector<Scalar> c(static_cast<std::size_t>(n), Scalar(0));
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return Poly(std::move(c));
}

Scalar coeff_or_zero(const Poly& p, int k) { return p.coeff(k); }

}  // namespace

int PearsonPair::naive_class() const { return std::max(phi.degree() - 2, psi.degree() - 1); }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Classical: return "classical";
    case Verdict::Semiclassical: return "semiclassical";
    case Verdict::NotRegular: return "not-regular";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

nlohmann::json ClassReport::to_json() const {
  nlohmann::json j{{"verdict", to_string(verdict)},
                   {"s_naive", s_naive},
                   {"r_common", r_common},
                   {"class", cls}};
  if (!diagnostic.empty()) j["diagnostic"] = diagnostic;
  return j;
}

Scalar pearson_residual(const Poly& a, const Poly& b, const LinearForm& u, int n,
                        const QContext& ctx) {
  Scalar lhs = a.is_zero() ? ctx.zero() : -apply_product(u, a, dq_monomial(n, ctx));
  Scalar rhs = b.is_zero() ? ctx.zero() : apply_product(u, b, sq_monomial(n, ctx));
  return lhs - rhs;
}

int pearson_depth(const Poly& a, const Poly& b, const LinearForm& u) {
  const int need = std::max(a.is_zero() ? 0 : a.degree() - 1, b.is_zero() ? 0 : b.degree());
  return u.valid_degree() - need;
}

Check verify_pearson(const PearsonPair& pair, const LinearForm& u, int n_max, const QContext& ctx) {
  require_aw(ctx, "verify_pearson");
  if (pair.phi.is_zero() && pair.psi.is_zero()) throw PreconditionError("Pearson pair is zero");
  const int depth = pearson_depth(pair.phi, pair.psi, u);
  if (n_max > depth) throw DegreeOverflow(n_max + (u.valid_degree() - depth), u.valid_degree());
  return residual_check("pearson-residual", 0, n_max, [&](int n) {
    return pearson_residual(pair.phi, pair.psi, u, n, ctx);
  });
}

Check regularity_criterion(const Poly& phi, const Poly& psi, int n_max, const QContext& ctx) {
  require_aw(ctx, "regularity_criterion");
  if (phi.degree() > 2 || psi.degree() > 1)
    throw PreconditionError("regularity criterion needs deg phi <= 2 and deg psi <= 1");
  const Scalar a = coeff_or_zero(phi, 2), b = coeff_or_zero(phi, 1), c = coeff_or_zero(phi, 0);
  const Scalar d = coeff_or_zero(psi, 1), e = coeff_or_zero(psi, 0);
  const Scalar al2m1 = ctx.alpha() * ctx.alpha() - Scalar(1);
  auto dn = [&](int n) { return a * ctx.gamma_n(n) + d * ctx.alpha_n(n); };
  return scan_check("regularity-criterion", 0, n_max, [&](int n) -> std::optional<nlohmann::json> {
    if (dn(n).is_zero()) return nlohmann::json{{"n", n}, {"reason", "d_n = 0"}};
    const Scalar d2n = dn(2 * n);
    if (d2n.is_zero()) return nlohmann::json{{"n", n}, {"reason", "d_2n = 0"}};
    const Scalar en = b * ctx.gamma_n(n) + e * ctx.alpha_n(n);
    const Scalar x0 = -en / d2n;
    const Scalar quad = d * al2m1 * ctx.gamma_n(2 * n) + a * ctx.alpha_n(2 * n);
    const Scalar lin = b * ctx.alpha_n(n) + e * al2m1 * ctx.gamma_n(n);
    const Scalar value = quad * (x0 * x0 - Scalar::constant(mpq_class(1, 2))) + lin * x0 + c + a / 2;
    if (value.is_zero())
      return nlohmann::json{{"n", n}, {"reason", "phi^[n](-e_n/d_2n) = 0"}, {"root", format_scalar(x0)}};
    return std::nullopt;
  });
}

nlohmann::json Admissibility::to_json() const {
  nlohmann::json j{{"admissible", admissible}, {"method", method}};
  if (fails_at) j["fails_at"] = *fails_at;
  return j;
}

Admissibility admissible(const Poly& first, const Poly& second, int n_max, const QContext& ctx) {
  require_aw(ctx, "admissible");
  if (second.is_zero()) throw PreconditionError("admissibility needs a nonzero second polynomial");
  Admissibility out;
  if (first.is_zero() || first.degree() - 1 != second.degree()) {
    out.method = "degree";
    return out;
  }
  const Scalar& lf = first.lc();
  const Scalar& ls = second.lc();
  if (ctx.mode() == Mode::Symbolic) {
    // lf gamma_n + ls alpha_{n-1} = A t^n + B t^{-n}
    out.method = "exact";
    const Scalar t = ctx.t();
    const Scalar w = t - t.inverse();
    const Scalar A = lf / w + ls / (2 * t);
    const Scalar B = -lf / w + ls * t / 2;
    if (A.is_zero() && B.is_zero()) {
      out.admissible = false;
      out.fails_at = 0;
    } else if (!A.is_zero() && !B.is_zero()) {
      auto mono = (-B / A).as_ratfunc().as_laurent_monomial();
      if (mono && mono->second == 1 && mono->first >= 0 && mono->first % 2 == 0) {
        out.admissible = false;
        out.fails_at = mono->first / 2;
      }
    }
    return out;
  }
  out.method = "scan";
  for (int n = 0; n <= n_max; ++n) {
    if ((lf * ctx.gamma_n(n) + ls * ctx.alpha_n(n - 1)).is_zero()) {
      out.admissible = false;
      out.fails_at = n;
      break;
    }
  }
  return out;
}

PearsonPair triple_to_pearson(const Poly& psi, const Poly& rho, const QContext& ctx) {
  require_aw(ctx, "triple_to_pearson");
  if (psi.is_zero()) throw PreconditionError("triple_to_pearson needs psi != 0");
  StructuralPolys U = structural_polys(ctx);
  return PearsonPair{rho - U.U1 * psi, psi * ctx.alpha()};
}

NormalPair pearson_to_normal(const PearsonPair& pair, const QContext& ctx) {
  require_aw(ctx, "pearson_to_normal");
  if (pair.phi.is_zero() && pair.psi.is_zero()) throw PreconditionError("Pearson pair is zero");
  StructuralPolys U = structural_polys(ctx);
  const Scalar& al = ctx.alpha();
  const Poly Dphi = dq(pair.phi, ctx), Dpsi = dq(pair.psi, ctx);
  Poly Phi = sq(pair.phi, ctx) * al - U.U1 * Dphi + (U.U1 * U.U1 - U.U2 * (al * al)) * Dpsi;
  Poly Psi = sq(pair.psi, ctx) * al + U.U1 * Dpsi - Dphi;
  return NormalPair{std::move(Phi), std::move(Psi)};
}

PearsonPair normal_to_pearson(const NormalPair& np, const QContext& ctx) {
  require_aw(ctx, "normal_to_pearson");
  if (np.Phi.is_zero() && np.Psi.is_zero()) throw PreconditionError("normal pair is zero");
  StructuralPolys U = structural_polys(ctx);
  return PearsonPair{sq(np.Phi, ctx) + U.U2 * dq(np.Psi, ctx), sq(np.Psi, ctx) + dq(np.Phi, ctx)};
}

ClassReport class_from_normal(const NormalPair& np, int s, const QContext& ctx) {
  ClassReport rep;
  if (np.degenerate()) {
    rep.verdict = Verdict::NotRegular;
    rep.diagnostic = "regularity contradiction: Phi or Psi vanishes";
    return rep;
  }
  rep.s_naive = normal_to_pearson(np, ctx).naive_class();
  rep.r_common = gcd(np.Phi, np.Psi).degree();
  if (rep.r_common > s - 1) {
    rep.verdict = Verdict::Inconclusive;
    rep.diagnostic = "class rule violated: " + std::to_string(rep.r_common) +
                     " common zeros exceed s - 1 = " + std::to_string(s - 1);
    return rep;
  }
  rep.cls = s - 1 - rep.r_common;
  rep.verdict = rep.cls == 0 ? Verdict::Classical : Verdict::Semiclassical;
  return rep;
}

Check verify_normal(const NormalPair& np, const LinearForm& u, int n_max, const QContext& ctx) {
  require_aw(ctx, "verify_normal");
  // <Phi D u, x^n> = -<u, D(Phi x^n)>, <Psi S u, x^n> = <u, S(Psi x^n)>.
  const int need = std::max(np.Phi.degree() - 1, np.Psi.degree());
  if (n_max + need > u.valid_degree()) throw DegreeOverflow(n_max + need, u.valid_degree());
  return residual_check("normal-form-residual", 0, n_max, [&](int n) {
    Scalar lhs = np.Phi.is_zero() ? ctx.zero() : -apply(u, dq_via_table(shifted(np.Phi, n), ctx));
    Scalar rhs = np.Psi.is_zero() ? ctx.zero() : apply(u, sq_via_table(shifted(np.Psi, n), ctx));
    return lhs - rhs;
  });
}

nlohmann::json pair_to_json(const PearsonPair& p) {
  return {{"phi", format_poly(p.phi)}, {"psi", format_poly(p.psi)}};
}

nlohmann::json pair_to_json(const NormalPair& p) {
  return {{"Phi", format_poly(p.Phi)}, {"Psi", format_poly(p.Psi)}};
}

}  // namespace qsemi
