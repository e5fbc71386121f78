#include "qsemi/structure.hpp"

#include <algorithm>
#include <mutex>

#include "qsemi/awops.hpp"
#include "qsemi/scan.hpp"

namespace qsemi {

namespace {

void require_aw(const QContext& ctx, const char* what) {
  if (ctx.kind() != OperatorKind::AskeyWilson)
    throw PreconditionError(std::string(what) + " needs an Askey-Wilson context");
}

void require_family_degree(const OPSFamily& fam, int needed, const char* what) {
  if (fam.degree() < needed)
    throw PreconditionError(std::string(what) + " needs the family built to degree " +
                            std::to_string(needed));
}

Scalar row_entry(const std::vector<std::vector<Scalar>>& rows, int n, int j) {
  if (n < 0 || j < 0 || n >= static_cast<int>(rows.size())) return Scalar();
  const auto& r = rows[static_cast<std::size_t>(n)];
  return j < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j)] : Scalar();
}

std::vector<std::vector<Scalar>> expand_rows(const OPSFamily& fam, int n_max,
                                             const std::function<Poly(int)>& image) {
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n_max + 1));
  parallel_for(0, n_max, [&](int n) {
    rows[static_cast<std::size_t>(n)] = expand_in_basis(image(n), fam);
  });
  return rows;
}

Scalar product_of_C(const OPSFamily& fam, int lo, int hi) {
  Scalar p = fam.context().one();
  for (int j = lo; j <= hi; ++j) p *= fam.C(j);
  return p;
}

int moment_depth_for(int n_max, std::initializer_list<const Poly*> polys) {
  int d = 0;
  for (const Poly* p : polys) d = std::max(d, p->degree());
  return n_max + d;
}

}  // namespace

Scalar BandRelation::entry(int n, int j) const { return row_entry(rows, n, j); }

std::set<int> BandRelation::offsets() const {
  std::set<int> out;
  for (int n = 0; n < static_cast<int>(rows.size()); ++n)
    for (int j = 0; j < static_cast<int>(rows[static_cast<std::size_t>(n)].size()); ++j)
      if (!rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)].is_zero()) out.insert(j - n);
  return out;
}

std::optional<int> BandRelation::exactness_gap() const {
  for (int n = s; n <= n_max; ++n)
    if (entry(n, n - s).is_zero()) return n;
  return std::nullopt;
}

nlohmann::json BandRelation::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (int n = 0; n < static_cast<int>(rows.size()); ++n)
    for (int j = 0; j < static_cast<int>(rows[static_cast<std::size_t>(n)].size()); ++j) {
      const Scalar& v = rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
      if (!v.is_zero()) entries.push_back({{"n", n}, {"offset", j - n}, {"value", format_scalar(v)}});
    }
  nlohmann::json offs = nlohmann::json::array();
  for (int o : offsets()) offs.push_back(o);
  return {{"phi", format_poly(phi)}, {"s", s}, {"n_max", n_max}, {"offsets", offs}, {"entries", entries}};
}

BandRelation extract_band(const OPSFamily& fam, const Poly& phi, int n_max) {
  const QContext& ctx = fam.context();
  require_aw(ctx, "extract_band");
  BandRelation band;
  band.phi = phi;
  band.n_max = n_max;
  if (phi.is_zero()) {
    band.rows.assign(static_cast<std::size_t>(n_max + 1), {});
    return band;
  }
  require_family_degree(fam, n_max + phi.degree() - 1, "extract_band");
  band.rows = expand_rows(fam, n_max, [&](int n) { return phi * dq(fam.P(n), ctx); });
  for (int n = 0; n <= n_max; ++n)
    for (int j = 0; j < static_cast<int>(band.rows[static_cast<std::size_t>(n)].size()); ++j)
      if (!band.entry(n, j).is_zero()) band.s = std::max(band.s, n - j);
  return band;
}

AveragedBand sq_band(const OPSFamily& fam, const BandRelation& band) {
  const QContext& ctx = fam.context();
  require_aw(ctx, "sq_band");
  AveragedBand out;
  const int N = band.n_max;
  if (!band.phi.is_zero()) require_family_degree(fam, N + band.phi.degree(), "sq_band");
  out.rows = expand_rows(fam, N, [&](int n) { return band.phi * sq(fam.P(n), ctx); });
  const int s = band.s;
  // a_{n+1,.} enters the relation, so the last row is left unchecked.
  out.check = scan_check("sq-band-lowest-entry", s + 1, N - 1, [&](int n) -> std::optional<nlohmann::json> {
    for (int j = 0; j < n - s - 1; ++j)
      if (!row_entry(out.rows, n, j).is_zero())
        return nlohmann::json{{"n", n}, {"j", j}, {"reason", "entry below the band"}};
    Scalar expected = -ctx.alpha() * band.entry(n, n - s) * fam.C(n - s) +
                      band.entry(n - 1, n - s - 1) * fam.C(n);
    Scalar got = row_entry(out.rows, n, n - s - 1);
    if (got == expected) return std::nullopt;
    return nlohmann::json{{"n", n}, {"expected", format_scalar(expected)}, {"got", format_scalar(got)}};
  });
  return out;
}

KFit fit_k_form(const std::vector<Scalar>& y, int s, const QContext& ctx) {
  KFit fit;
  fit.report.set_suite("k-form");
  const int last = s + static_cast<int>(y.size()) - 1;
  if (y.size() < 2) throw PreconditionError("k-form fit needs y(s) and y(s+1)");
  auto Y = [&](int n) -> const Scalar& { return y[static_cast<std::size_t>(n - s)]; };
  // k1 t^s + k2 t^-s = y(s), k1 t^{s+1} + k2 t^{-s-1} = y(s+1)
  const Scalar det = ctx.t_pow(-1) - ctx.t_pow(1);
  if (det.is_zero()) {
    fit.singular = true;
    fit.report.add(Check::fail("k-form", "singular 2x2 system"));
    return fit;
  }
  fit.k1 = (Y(s) * ctx.t_pow(-s - 1) - Y(s + 1) * ctx.t_pow(-s)) / det;
  fit.k2 = (Y(s + 1) * ctx.t_pow(s) - Y(s) * ctx.t_pow(s + 1)) / det;
  fit.report.add(residual_check("k-form", s, last, [&](int n) {
    return Y(n) - (fit.k1 * ctx.t_pow(n) + fit.k2 * ctx.t_pow(-n));
  }));
  fit.report.add(residual_check("difference-equation", s + 2, last, [&](int n) {
    return Y(n) - 2 * ctx.alpha() * Y(n - 1) + Y(n - 2);
  }));
  return fit;
}

KFit fit_k1k2(const BandRelation& band, const OPSFamily& fam) {
  const int s = band.s;
  if (band.n_max < s + 2) throw PreconditionError("k-form fit needs the band to depth s + 2");
  if (auto gap = band.exactness_gap()) throw NotRegular("band is not s-exact", *gap);
  std::vector<Scalar> y;
  for (int n = s; n <= band.n_max; ++n)
    y.push_back(band.entry(n, n - s) / product_of_C(fam, n - s + 1, n));
  return fit_k_form(y, s, fam.context());
}

Report band_from_triple(const OPSFamily& fam, const Poly& phi, const Poly& psi, const Poly& rho,
                     int n_max, const BandRelation* reference) {
  const QContext& ctx = fam.context();
  require_aw(ctx, "band_from_triple");
  if (phi.is_zero() || psi.is_zero() || rho.is_zero())
    throw PreconditionError("band_from_triple needs three nonzero polynomials");
  Report rep("band-from-triple");
  const int s = std::max(psi.degree(), rho.degree() - 1);
  rep.config() = {{"s", s}, {"n_max", n_max}};

  Admissibility adm = admissible(rho, psi, n_max, ctx);
  rep.add(adm.admissible ? Check::pass("admissible") : Check::fail("admissible"))
      .with_witness(adm.to_json());

  const int depth = 2 * n_max + phi.degree();
  require_family_degree(fam, std::max((depth + 1) / 2, n_max), "band_from_triple");
  const LinearForm u = moments(fam, depth);

  // low[n][j] = a_{n,j} for j <= n - s.
  std::vector<std::vector<Scalar>> low(static_cast<std::size_t>(n_max + 1));
  parallel_for(0, n_max, [&](int n) {
    const int top = n - s;
    if (top < 0) return;
    const Poly g = phi * dq(fam.P(n), ctx);
    std::vector<Scalar> w(static_cast<std::size_t>(top + 1));
    for (int k = 0; k <= top; ++k) w[static_cast<std::size_t>(k)] = apply_product(u, Poly::monomial(ctx.one(), k), g);
    auto& row = low[static_cast<std::size_t>(n)];
    for (int j = 0; j <= top; ++j) {
      Scalar acc;
      for (int k = 0; k <= j; ++k) acc += fam.P(j).coeff(k) * w[static_cast<std::size_t>(k)];
      row.push_back(acc / fam.norm(j));
    }
  });

  rep.add(scan_check("below-band-zero", 0, n_max, [&](int n) -> std::optional<nlohmann::json> {
    for (int j = 0; j < n - s; ++j)
      if (!low[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)].is_zero())
        return nlohmann::json{{"n", n}, {"j", j}};
    return std::nullopt;
  }));

  const Scalar lpsi = psi.degree() == s ? psi.lc() : ctx.zero();
  const Scalar lrho = rho.degree() - 1 == s ? rho.lc() : ctx.zero();
  rep.add(residual_check("lowest-entry-formula", s, n_max, [&](int n) {
    Scalar d = lpsi * ctx.alpha_n(n - s - 1) + lrho * ctx.gamma_n(n - s);
    Scalar expected = -d * fam.norm(n) / (ctx.alpha() * fam.norm(n - s));
    return low[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - s)] - expected;
  }));

  if (reference) {
    const int hi = std::min(n_max, reference->n_max);
    rep.add(scan_check("matches-extracted-band", 0, hi, [&](int n) -> std::optional<nlohmann::json> {
      for (int j = 0; j <= n - s; ++j)
        if (low[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] != reference->entry(n, j))
          return nlohmann::json{{"n", n}, {"j", j}};
      return std::nullopt;
    }));
  }
  return rep;
}

Poly band_dual_poly(const BandRelation& band, const OPSFamily& fam, int n, int sign) {
  const int lo = std::max(0, n - band.phi.degree() + 1);
  const int hi = n + band.s;
  if (hi > band.n_max) throw PreconditionError("band too short for R_" + std::to_string(hi));
  Poly out;
  for (int j = lo; j <= hi; ++j) {
    Scalar a = band.entry(j, n);
    if (a.is_zero()) continue;
    out += fam.P(j) * (Scalar(sign) * fam.norm(n) * a / fam.norm(j));
  }
  return out;
}

TripleResult triple_from_band(const BandRelation& band, const OPSFamily& fam, int verify_to) {
  const QContext& ctx = fam.context();
  require_aw(ctx, "triple_from_band");
  if (auto gap = band.exactness_gap()) throw NotRegular("band is not s-exact", *gap);
  TripleResult out;
  out.report.set_suite("triple-from-band");
  Poly Rs = band_dual_poly(band, fam, 0, -1);
  if (Rs.is_zero()) throw NotRegular("R_s vanishes; band is degenerate", band.s);
  Poly Rs1 = band_dual_poly(band, fam, 1, -1);
  out.psi = Rs;
  out.rho = Rs1 * ctx.alpha() - (Poly::x() - Poly::constant(ctx.alpha() * fam.B(0))) * Rs;
  out.report.config() = {{"s", band.s}, {"verify_to", verify_to},
                         {"psi", format_poly(out.psi)}, {"rho", format_poly(out.rho)}};

  const int depth = moment_depth_for(verify_to, {&band.phi, &out.psi, &out.rho});
  require_family_degree(fam, (depth + 1) / 2, "triple_from_band");
  const LinearForm u = moments(fam, depth);
  const Poly& phi = band.phi;
  out.report.add(residual_check("D-equation", 0, verify_to, [&](int n) {
    return -apply_product(u, phi, dq_monomial(n, ctx)) -
           apply_product(u, out.psi, Poly::monomial(ctx.one(), n));
  }));
  out.report.add(residual_check("S-equation", 0, verify_to, [&](int n) {
    return apply_product(u, phi, sq_monomial(n, ctx)) -
           apply_product(u, out.rho, Poly::monomial(ctx.one(), n));
  }));
  out.admissibility = admissible(out.rho, out.psi, verify_to, ctx);
  out.report.add(out.admissibility.admissible ? Check::pass("admissible") : Check::fail("admissible"))
      .with_witness(out.admissibility.to_json());
  return out;
}

NormalResult normal_form_pipeline(const BandRelation& band, const OPSFamily& fam, int verify_to) {
  const QContext& ctx = fam.context();
  require_aw(ctx, "normal_form_pipeline");
  if (auto gap = band.exactness_gap()) throw NotRegular("band is not s-exact", *gap);
  NormalResult out;
  out.report.set_suite("normal-form");
  out.Q_s = band_dual_poly(band, fam, 0, 1);
  out.Q_s1 = band_dual_poly(band, fam, 1, 1);
  out.R_s1 = out.Q_s1 - Poly(std::vector<Scalar>{-fam.B(0), ctx.alpha()}) * out.Q_s;
  const PearsonPair pair{out.R_s1, out.Q_s};
  out.normal = pearson_to_normal(pair, ctx);
  out.report.config() = {{"s", band.s}, {"verify_to", verify_to}};

  const int depth = moment_depth_for(verify_to, {&out.R_s1, &out.Q_s, &out.normal.Phi, &out.normal.Psi});
  require_family_degree(fam, (depth + 1) / 2, "normal_form_pipeline");
  const LinearForm u = moments(fam, depth);
  out.report.add(verify_pearson(pair, u, verify_to, ctx)).name = "pearson-from-band";
  if (out.normal.degenerate()) {
    out.report.add(Check::fail("normal-form", "regularity contradiction: Phi or Psi vanishes"));
  } else {
    out.report.add(verify_normal(out.normal, u, verify_to, ctx));
  }
  out.cls = class_from_normal(out.normal, band.s, ctx);
  Check verdict = out.cls.verdict == Verdict::Classical || out.cls.verdict == Verdict::Semiclassical
                      ? Check::pass("class-rule")
                      : Check::fail("class-rule", out.cls.diagnostic);
  out.report.add(verdict).with_witness(out.cls.to_json());
  return out;
}

}  // namespace qsemi
