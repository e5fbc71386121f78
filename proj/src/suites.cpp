#include "qsemi/suites.hpp"

#include "qsemi/awops.hpp"
#include "qsemi/expr_parser.hpp"
#include "qsemi/families.hpp"
#include "qsemi/hahn.hpp"
#include "qsemi/pearson.hpp"
#include "qsemi/scan.hpp"
#include "qsemi/structure.hpp"

namespace qsemi {

namespace {

void require_aw(const QContext& ctx, const char* suite) {
  if (ctx.kind() != OperatorKind::AskeyWilson)
    throw PreconditionError(std::string(suite) + " needs an Askey-Wilson context");
}

nlohmann::json base_config(int n_max, const QContext& ctx) {
  nlohmann::json cfg = {{"N", n_max}, {"mode", ctx.mode() == Mode::Symbolic ? "symbolic" : "rational"}};
  if (ctx.mode() == Mode::Rational) {
    if (ctx.kind() == OperatorKind::AskeyWilson) cfg["t"] = format_scalar(ctx.t());
    else cfg["q"] = format_scalar(ctx.q());
  }
  if (ctx.kind() == OperatorKind::Hahn) cfg["omega"] = format_scalar(ctx.omega());
  return cfg;
}

Check equality_check(std::string name, const Poly& got, const Poly& want) {
  Check c = got == want ? Check::pass(std::move(name)) : Check::fail(std::move(name));
  if (!c.passed) c.with_witness({{"got", format_poly(got)}, {"expected", format_poly(want)}});
  return c;
}

// Coefficients of the counterexample family's structure relations.
struct CounterexampleData {
  const QContext& ctx;
  const OPSFamily& fam;

  Scalar sign(int n) const { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }
  Scalar alpha2m1() const { return ctx.alpha() * ctx.alpha() - Scalar(1); }
  Scalar C(int n) const { return fam.C(n); }
  Scalar b(int n) const { return -(Scalar(1) - sign(n) * ctx.t_pow(n)) * (sign(n) - ctx.t_pow(1 - n)) / 2; }
  Scalar a(int n) const { return alpha2m1() * ctx.gamma_n(n); }
  Scalar c(int n) const {
    return b(n + 1) * C(n) - ctx.alpha() * b(n) * C(n - 1) - alpha2m1() * ctx.gamma_n(n) * C(n);
  }
  Scalar d(int n) const { return (b(n - 1) * C(n) - ctx.alpha() * b(n) * C(n - 1)) * C(n - 2); }
  Scalar C_product(int n, int count) const {
    Scalar p = ctx.one();
    for (int j = 0; j < count; ++j) p *= C(n - j);
    return p;
  }
};

Poly family_poly(const OPSFamily& fam, int n) { return n < 0 ? Poly() : fam.P(n); }

}  // namespace

Report run_counterexample_suite(int n_max, const QContext& ctx) {
  require_aw(ctx, "counterexample suite");
  if (n_max < 4) throw PreconditionError("counterexample suite needs N >= 4");
  Report rep("counterexample");
  rep.config() = base_config(n_max, ctx);
  const OPSFamily fam = OPSFamily::build(counterexample_family(ctx), n_max + 2, ctx);
  const CounterexampleData cd{ctx, fam};
  const Poly U2 = structural_polys(ctx).U2;

  rep.add(scan_check("sq-relation", 1, n_max, [&](int n) -> std::optional<nlohmann::json> {
    const Poly rhs = fam.P(n) * ctx.alpha_n(n) + family_poly(fam, n - 2) * (cd.b(n) * cd.C(n - 1));
    const Poly diff = sq(fam.P(n), ctx) - rhs;
    if (diff.is_zero()) return std::nullopt;
    return nlohmann::json{{"n", n}, {"difference", format_poly(diff)}};
  }));
  rep.add(scan_check("structure-relation", 1, n_max, [&](int n) -> std::optional<nlohmann::json> {
    const Poly rhs = fam.P(n + 1) * cd.a(n) + fam.P(n - 1) * cd.c(n) + family_poly(fam, n - 3) * cd.d(n);
    const Poly diff = U2 * dq(fam.P(n), ctx) - rhs;
    if (diff.is_zero()) return std::nullopt;
    return nlohmann::json{{"n", n}, {"difference", format_poly(diff)}};
  }));

  const BandRelation band = extract_band(fam, U2, n_max);
  const NormalResult nr = normal_form_pipeline(band, fam, n_max);
  rep.merge(nr.report, "normal-form/");
  rep.add(equality_check("Q3-closed-form", nr.Q_s, parse_poly("(t^2 - 1)*t^-3*x*(4*x^2 - 3 - t^2)/4", ctx)));
  rep.add(equality_check("Q4-closed-form", nr.Q_s1,
                         parse_poly("(t^2 - 1)*t^-4*(8*x^4 - 8*x^2 + 1 - t^4)/8", ctx)));
  rep.add(equality_check("R4-closed-form", nr.R_s1,
                         parse_poly("-(1 - t^-2)^2*(4*x^4 - (t^2 + 5)*x^2 + t^2 + 1)/8", ctx)));
  rep.add(equality_check(
      "Phi-closed-form", nr.normal.Phi,
      parse_poly("-(t^2 - 1)^2*t^-3*(8*t^2*x^4 - 2*(t^4 + 4*t^2 + 1)*x^2 + (t^2 + 1)^2)/16", ctx)));
  rep.add(equality_check("Psi-closed-form", nr.normal.Psi,
                         parse_poly("(t - t^-1)*(4*t^2*x^2 - 3*t^2 - 1)*x/4", ctx)));
  const Poly g = gcd(nr.normal.Phi, nr.normal.Psi);
  rep.add(g.degree() == 0 ? Check::pass("normal-gcd") : Check::fail("normal-gcd"))
      .with_witness({{"gcd", format_poly(g)}});

  // Closed-form Pearson pair: phi = -(1 - 1/q)^2 (4x^4 - (q+5)x^2 + q + 1)/8, psi = Q_3.
  const PearsonPair pair{parse_poly("-(1 - t^-2)^2*(4*x^4 - (t^2 + 5)*x^2 + t^2 + 1)/8", ctx),
                         parse_poly("(t^2 - 1)*t^-3*x*(4*x^2 - 3 - t^2)/4", ctx)};
  const LinearForm u = moments(fam, n_max + 4);
  rep.add(verify_pearson(pair, u, n_max, ctx));

  Check cls = nr.cls.cls == 2 && nr.cls.verdict == Verdict::Semiclassical ? Check::pass("class-two")
                                                                          : Check::fail("class-two");
  cls.with_witness(nr.cls.to_json());
  rep.add(cls);
  return rep;
}

Report run_second_order_suite(int n_max, const QContext& ctx) {
  require_aw(ctx, "second-order suite");
  if (n_max < 6) throw PreconditionError("second-order suite needs N >= 6");
  Report rep("second-order");
  rep.config() = base_config(n_max, ctx);
  const OPSFamily fam = OPSFamily::build(counterexample_family(ctx), n_max + 2, ctx);
  const CounterexampleData cd{ctx, fam};
  const Scalar al = ctx.alpha(), a2m1 = cd.alpha2m1();
  const Poly x2 = Poly::monomial(ctx.one(), 2);
  const Poly lhs_factor = (x2 - Poly::constant(al * al)) * (Poly::constant(ctx.one()) - x2) * (a2m1 * a2m1);

  const int lo = 6;
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n_max + 1));
  parallel_for(lo, n_max, [&](int n) {
    rows[static_cast<std::size_t>(n)] = expand_in_basis(lhs_factor * dq(dq(fam.P(n), ctx), ctx), fam);
  });
  auto coeff = [&](int n, int j) {
    const auto& r = rows[static_cast<std::size_t>(n)];
    return j >= 0 && j < static_cast<int>(r.size()) ? r[static_cast<std::size_t>(j)] : ctx.zero();
  };
  // Coefficient of P_{n - drop} against a closed form.
  auto compare = [&](const char* name, int drop, auto expected) {
    return scan_check(name, lo, n_max, [&](int n) -> std::optional<nlohmann::json> {
      const Scalar want = expected(n);
      const Scalar got = coeff(n, n - drop);
      if (got == want) return std::nullopt;
      return nlohmann::json{{"n", n}, {"got", format_scalar(got)}, {"expected", format_scalar(want)}};
    });
  };

  rep.add(scan_check("support", lo, n_max, [&](int n) -> std::optional<nlohmann::json> {
    const auto& r = rows[static_cast<std::size_t>(n)];
    for (int j = 0; j < static_cast<int>(r.size()); ++j) {
      const int off = j - n;
      if (off == 2 || off == 0 || off == -2 || off == -4 || off == -6) continue;
      if (!r[static_cast<std::size_t>(j)].is_zero()) return nlohmann::json{{"n", n}, {"offset", off}};
    }
    return std::nullopt;
  }));
  rep.add(scan_check("leading-coefficient", lo, n_max, [&](int n) -> std::optional<nlohmann::json> {
    const Scalar want = -a2m1 * a2m1 * ctx.gamma_n(n) * ctx.gamma_n(n - 1);
    if (coeff(n, n + 2) == want) return std::nullopt;
    return nlohmann::json{{"n", n}, {"got", format_scalar(coeff(n, n + 2))}};
  }));
  auto C = [&](int n) { return cd.C(n); };
  auto two_al_a = Scalar(2) * al * a2m1;
  auto four_al2_a = Scalar(4) * al * al * a2m1;
  rep.add(compare("d_n,1", 0, [&](int n) {
    const Scalar an2 = ctx.alpha_n(n) * ctx.alpha_n(n) - Scalar(1);
    return cd.a(n) * cd.c(n + 1) + cd.a(n - 1) * cd.c(n) - two_al_a * an2 * (C(n + 1) + C(n) - Scalar(1)) -
           four_al2_a * ctx.alpha_n(n - 1) * cd.b(n) * C(n - 1);
  }));
  rep.add(compare("d_n,2", 2, [&](int n) {
    const Scalar an2 = ctx.alpha_n(n) * ctx.alpha_n(n) - Scalar(1);
    return cd.a(n) * cd.d(n + 1) + cd.c(n) * cd.c(n - 1) + cd.a(n - 3) * cd.d(n) -
           two_al_a * an2 * C(n) * C(n - 1) -
           four_al2_a * ctx.alpha_n(n - 1) * cd.b(n) * C(n - 1) * (C(n - 1) + C(n - 2) - Scalar(1)) -
           two_al_a * cd.b(n) * cd.b(n - 2) * C(n - 1) * C(n - 3);
  }));
  rep.add(compare("d_n,3", 4, [&](int n) {
    return cd.c(n) * cd.d(n - 1) + cd.c(n - 3) * cd.d(n) -
           four_al2_a * ctx.alpha_n(n - 1) * cd.b(n) * C(n - 1) * C(n - 2) * C(n - 3) -
           two_al_a * cd.b(n) * cd.b(n - 2) * C(n - 1) * C(n - 3) * (C(n - 3) + C(n - 4) - Scalar(1));
  }));
  rep.add(compare("d_n,4-elimination", 6, [&](int n) {
    return cd.d(n) * cd.d(n - 3) - two_al_a * cd.b(n) * cd.b(n - 2) * C(n - 1) * C(n - 3) * C(n - 4) * C(n - 5);
  }));
  rep.add(compare("d_n,4-alpha-product-form", 6,
                  [&](int n) { return -Scalar(4) * al * al * ctx.t_pow(3 - n) * cd.C_product(n, 6); }));
  const Scalar qm1 = ctx.q() - Scalar(1);
  rep.add(compare("d_n,4-q-product-form", 6,
                  [&](int n) { return -qm1 * qm1 * ctx.t_pow(1 - 2 * n) * cd.C_product(n, 6); }));
  rep.add(scan_check("d_n,4-nonzero", lo, n_max, [&](int n) -> std::optional<nlohmann::json> {
    if (coeff(n, n - 6).is_zero()) return nlohmann::json{{"n", n}};
    return std::nullopt;
  }));
  return rep;
}

Report run_classical_reference_suite(int n_max, const QContext& ctx) {
  require_aw(ctx, "classical-reference");
  if (n_max < 4) throw PreconditionError("classical reference suite needs N >= 4");
  Report rep("classical-reference");
  rep.config() = base_config(n_max, ctx);
  const OPSFamily fam = OPSFamily::build(q_hermite_family(ctx), n_max + 1, ctx);
  const Poly one = Poly::constant(ctx.one());
  const BandRelation band = extract_band(fam, one, n_max);

  Check offsets = band.s == 1 && band.offsets() == std::set<int>{-1} ? Check::pass("band-offsets")
                                                                     : Check::fail("band-offsets");
  offsets.with_witness({{"s", band.s}, {"offsets", band.offsets()}});
  rep.add(offsets);

  const TripleResult tr = triple_from_band(band, fam, n_max);
  rep.merge(tr.report, "triple/");
  const PearsonPair pair = triple_to_pearson(tr.psi, tr.rho, ctx);
  rep.config()["pearson"] = pair_to_json(pair);
  rep.add(regularity_criterion(pair.phi, pair.psi, std::max(n_max, 50), ctx));

  const NormalResult nr = normal_form_pipeline(band, fam, n_max);
  rep.merge(nr.report, "normal-form/");
  Check cls = nr.cls.verdict == Verdict::Classical && nr.cls.r_common == band.s - 1 ? Check::pass("classical")
                                                                                   : Check::fail("classical");
  cls.with_witness(nr.cls.to_json());
  rep.add(cls);
  return rep;
}

Report run_hahn_class_one_suite(int n_max, const QContext& ctx, const HahnSuiteParams& p) {
  if (ctx.kind() != OperatorKind::Hahn) throw PreconditionError("Hahn class-one suite needs a Hahn context");
  if (n_max < 2) throw PreconditionError("Hahn class-one suite needs N >= 2");
  Report rep("hahn-class-one");
  rep.config() = base_config(n_max, ctx);
  rep.config()["params"] = {{"a", p.a}, {"b", p.b}, {"r", p.r}, {"s", p.s}};
  rep.merge(verify_class_one_example(Scalar(p.a), Scalar(p.b), n_max, ctx), "class-one/");

  const Scalar r = ctx.lift(Scalar(p.r)), s = ctx.lift(Scalar(p.s));
  const Scalar q = ctx.q();
  const Scalar shift = ctx.omega() / (Scalar(1) - q);
  const Poly psi = Poly(std::vector<Scalar>{-(r + s) - shift, ctx.one()}) * ((q.inverse() - Scalar(1)) * r * s).inverse();
  const FamilySpec asc = al_salam_carlitz_family(r, s, ctx);
  const HahnRecurrence res = hahn_recurrence(Poly::constant(ctx.one()), psi, n_max, starred(ctx));
  rep.add(scan_check("asc-recurrence-formulas", 0, n_max, [&](int n) -> std::optional<nlohmann::json> {
    const Scalar B = res.B[static_cast<std::size_t>(n)], C = res.C[static_cast<std::size_t>(n + 1)];
    if (B == asc.B(n) && C == asc.C(n + 1)) return std::nullopt;
    return nlohmann::json{{"n", n}, {"B", format_scalar(B)}, {"C_next", format_scalar(C)}};
  }));

  const OPSFamily fam = OPSFamily::build(asc, n_max, ctx);
  const HahnClassification cl = classify_hahn_family(fam, Scalar(0), n_max);
  rep.merge(cl.report, "asc-classifier/");
  rep.add(cl.verdict == Verdict::Classical ? Check::pass("asc-classical") : Check::fail("asc-classical"));
  return rep;
}

}  // namespace qsemi
