#include <random>

#include "doctest.h"
#include "qsemi/families.hpp"
#include "qsemi/hahn.hpp"

using namespace qsemi;

namespace {

Poly lin(const QContext& ctx, const Scalar& c0, const Scalar& c1) {
  return Poly(std::vector<Scalar>{ctx.lift(c0), ctx.lift(c1)});
}

Poly random_poly(std::mt19937& rng, const QContext& ctx, int deg) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Scalar> c;
  for (int k = 0; k <= deg; ++k) c.push_back(ctx.lift(Scalar(coeff(rng))));
  return Poly(std::move(c));
}

Poly asc_psi(const Scalar& r, const Scalar& s, const QContext& ctx) {
  const Scalar q = ctx.q();
  const Scalar shift = ctx.omega() / (Scalar(1) - q);
  return lin(ctx, -(r + s) - shift, Scalar(1)) * ((q.inverse() - Scalar(1)) * r * s).inverse();
}

}  // namespace

TEST_CASE("Hahn operator on polynomials") {
  const QContext ctx = QContext::hahn_symbolic(Scalar(3));
  const Scalar q = ctx.q(), w = ctx.omega();
  const Poly x = Poly::x();
  CHECK(dqw(Poly::constant(Scalar(7)), ctx).is_zero());
  CHECK(dqw(x, ctx) == Poly::constant(ctx.one()));
  CHECK(dqw(x * x, ctx) == lin(ctx, w, q + Scalar(1)));

  // Pointwise against the difference quotient at a rational base.
  const QContext rat = QContext::hahn_rational(mpq_class(2, 3), mpq_class(1, 5));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly f = random_poly(rng, rat, 1 + trial % 6);
    const Poly g = dqw(f, rat);
    for (int k = -3; k <= 3; ++k) {
      const Scalar pt = rat.lift(Scalar(k));
      const Scalar den = (rat.q() - Scalar(1)) * pt + rat.omega();
      if (den.is_zero()) continue;
      CHECK(g(pt) == (f(rat.q() * pt + rat.omega()) - f(pt)) / den);
    }
  }
}

TEST_CASE("product rule and adjoint base") {
  const QContext ctx = QContext::hahn_symbolic(Scalar(-2));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 8; ++trial) {
    const Poly f = random_poly(rng, ctx, trial % 4 + 1), g = random_poly(rng, ctx, trial % 3 + 2);
    CHECK(dqw(f * g, ctx) == dqw(f, ctx) * compose_linear(g, ctx.q(), ctx.omega()) + f * dqw(g, ctx));
  }
  const QContext adj = starred(ctx);
  CHECK(adj.q() == ctx.q().inverse());
  CHECK(adj.omega() == -ctx.omega() / ctx.q());
  const QContext back = starred(adj);
  CHECK(back.q() == ctx.q());
  CHECK(back.omega() == ctx.omega());
  CHECK_THROWS_AS(starred(QContext::askey_wilson_symbolic()), PreconditionError);
}

TEST_CASE("form operator and adjoint residual") {
  const QContext ctx = QContext::hahn_symbolic(Scalar(1));
  const OPSFamily fam = OPSFamily::build(al_salam_carlitz_family(Scalar(2), Scalar(-3), ctx), 8, ctx);
  const LinearForm u = moments(fam, 14);

  const LinearForm du = dqw_dual(u, ctx);
  CHECK(du.valid_degree() == 15);
  CHECK(du.moment(0).is_zero());
  CHECK(du.moment(1) == -ctx.q().inverse() * u.moment(0));

  // <D u, f> = -q^{-1} <u, D* f> for arbitrary f, computed without the monomial route.
  std::mt19937 rng(3);
  const QContext adj = starred(ctx);
  for (int trial = 0; trial < 5; ++trial) {
    const Poly f = random_poly(rng, ctx, 2 + trial);
    CHECK(apply(du, f) == -ctx.q().inverse() * apply(u, dqw(f, adj)));
  }

  // The adjoint residual is the moment sequence of D*(phi u) - psi u.
  const Poly phi = random_poly(rng, ctx, 2), psi = random_poly(rng, ctx, 1);
  const LinearForm lhs = dqw_dual(mul_poly(phi, u), adj) - mul_poly(psi, u);
  for (int n = 0; n <= 10; ++n) CHECK(adjoint_pearson_residual(phi, psi, u, n, ctx) == lhs.moment(n));

  // Al-Salam-Carlitz moments solve their Pearson equation.
  const Poly one = Poly::constant(ctx.one());
  for (int n = 0; n <= 12; ++n)
    CHECK(adjoint_pearson_residual(one, asc_psi(Scalar(2), Scalar(-3), ctx), u, n, ctx).is_zero());
}

TEST_CASE("recurrence formulas reproduce Al-Salam-Carlitz") {
  SUBCASE("symbolic") {
    const QContext ctx = QContext::hahn_symbolic(Scalar(3));
    const Scalar r(2), s(5);
    const HahnRecurrence res = hahn_recurrence(Poly::constant(ctx.one()), asc_psi(r, s, ctx), 12, starred(ctx));
    const FamilySpec asc = al_salam_carlitz_family(r, s, ctx);
    CHECK(res.regularity.passed);
    REQUIRE(res.B.size() == 13);
    REQUIRE(res.C.size() == 14);
    for (int n = 0; n <= 12; ++n) {
      CHECK(res.B[n] == asc.B(n));
      CHECK(res.C[n + 1] == asc.C(n + 1));
    }
  }
  SUBCASE("rational against moments") {
    const QContext ctx = QContext::hahn_rational(mpq_class(1, 3), mpq_class(2));
    const Scalar r = ctx.lift(Scalar(1)), s = ctx.lift(Scalar(-4));
    const HahnRecurrence res = hahn_recurrence(Poly::constant(ctx.one()), asc_psi(r, s, ctx), 6, starred(ctx));
    // Oracle: moments from the recurrence, then the recurrence back from the moments.
    const OPSFamily fam = OPSFamily::build(al_salam_carlitz_family(r, s, ctx), 8, ctx);
    const Recurrence back = recurrence_from_moments(moments(fam, 15), 7);
    for (int n = 0; n <= 6; ++n) {
      CHECK(res.B[n] == back.B[n]);
      CHECK(res.C[n + 1] == back.C[n + 1]);
    }
  }
}

TEST_CASE("regularity scan failure") {
  const QContext ctx = QContext::hahn_rational(mpq_class(2), mpq_class(0));
  // phi = x + 3/16, psi = x: the root -[2]/q^4 is hit at n = 2.
  const Poly phi = lin(ctx, Scalar::rational(mpq_class(3, 16)), Scalar(1));
  const Poly psi = lin(ctx, Scalar(0), Scalar(1));
  const Check c = hahn_regularity(phi, psi, 10, ctx);
  CHECK_FALSE(c.passed);
  CHECK(c.first_failure == 2);
  try {
    hahn_recurrence(phi, psi, 10, ctx);
    FAIL("expected NotRegular");
  } catch (const NotRegular& e) {
    CHECK(e.index() == 2);
  }
  CHECK(hahn_regularity(phi, psi, 1, ctx).passed);
  CHECK_THROWS_AS(hahn_regularity(Poly::monomial(ctx.one(), 3), psi, 3, ctx), PreconditionError);
}

TEST_CASE("class-one example") {
  const QContext ctx = QContext::hahn_symbolic(Scalar(3));
  const Report rep = verify_class_one_example(Scalar(1), Scalar(2), 10, ctx);
  CHECK(rep.pass());
  for (const char* name : {"structure-relation", "b_n-nonzero", "classifier-inequality", "class-one", "pearson"}) {
    INFO(name);
    REQUIRE(rep.find(name) != nullptr);
    CHECK(rep.find(name)->passed);
  }

  const HahnStructureRelation st = class_one_structure(Scalar(1), Scalar(2), ctx);
  CHECK(st.a(2).is_zero());
  CHECK(st.b(1) == ctx.one() - st.a(1));
  CHECK(st.cn(3) == -st.c * st.b(3));

  // A wrong structure coefficient is caught.
  const OPSFamily fam = OPSFamily::build(hahn_class_one_family(Scalar(1), Scalar(2), ctx), 6, ctx);
  HahnStructureRelation bad = st;
  bad.a = [a = st.a](int n) { return n == 4 ? a(n) + Scalar(1) : a(n); };
  const Report r = verify_structure_relation(fam, bad, 6);
  CHECK_FALSE(r.pass());
  CHECK(r.find("structure-relation")->first_failure == 4);
}

TEST_CASE("class-one parameter conditions") {
  const QContext ctx = QContext::hahn_symbolic(Scalar(0));
  const Scalar t = ctx.t();
  // a - b = (a + b) t^3 with a + b = 1.
  const Scalar a = (Scalar(1) + t.pow(3)) / Scalar(2), b = (Scalar(1) - t.pow(3)) / Scalar(2);
  CHECK(class_one_parameter_violation(a, b, 20, ctx) == 3);
  CHECK_FALSE(class_one_parameter_violation(Scalar(1), Scalar(2), 20, ctx).has_value());
  CHECK_THROWS_AS(verify_class_one_example(a, b, 6, ctx), PreconditionError);
  CHECK_THROWS_AS(verify_class_one_example(Scalar(1), Scalar(-1), 6, ctx), PreconditionError);
  CHECK_THROWS_AS(verify_class_one_example(Scalar(1), Scalar(0), 6, ctx), PreconditionError);

  const QContext rat = QContext::hahn_rational(mpq_class(1, 2), mpq_class(0));
  // n = 1: a - b = (a + b)/2 with a = 3, b = 1.
  CHECK(class_one_parameter_violation(Scalar(3), Scalar(1), 20, rat) == 1);
  CHECK_FALSE(class_one_parameter_violation(Scalar(1), Scalar(2), 20, rat).has_value());
}

TEST_CASE("classifier branches") {
  const QContext ctx = QContext::hahn_symbolic(Scalar(3));
  const Scalar r(2), s(5);
  const FamilySpec asc = al_salam_carlitz_family(r, s, ctx);

  SUBCASE("Al-Salam-Carlitz is classical") {
    const OPSFamily fam = OPSFamily::build(asc, 10, ctx);
    const HahnClassification cl = classify_hahn_family(fam, Scalar(0), 8);
    CHECK(cl.report.pass());
    CHECK(cl.verdict == Verdict::Classical);
    CHECK(cl.cls == 0);
    CHECK(cl.test_value == cl.classical_value);
    CHECK(cl.report.find("classical-pearson")->passed);
  }

  SUBCASE("decomposition branch") {
    // u = lambda (x - c)^{-1} w + delta_c with w of Al-Salam-Carlitz type.
    const LinearForm w = moments(OPSFamily::build(asc, 12, ctx), 24);
    const Scalar c(-1), lambda(3);
    const LinearForm u = lambda * div_linear(c, w) + delta(c, 25);
    const Recurrence rec = recurrence_from_moments(u, 10);
    const OPSFamily fam = OPSFamily::build(table_family("perturbed", rec.B, rec.C), 10, ctx);
    const HahnClassification cl = classify_hahn_family(fam, c, 9);
    CHECK(cl.report.pass());
    CHECK(cl.decomposition_condition);
    REQUIRE(cl.r_plus_s.has_value());
    CHECK(*cl.r_plus_s == r + s);
    CHECK(*cl.r_times_s == r * s);
    for (const char* name : {"decomposed-pearson", "decomposition", "decomposed-recurrence"}) {
      INFO(name);
      REQUIRE(cl.report.find(name) != nullptr);
      CHECK(cl.report.find(name)->passed);
    }
  }

  SUBCASE("family without the structure relation") {
    const OPSFamily fam = OPSFamily::build(hahn_class_one_family(Scalar(1), Scalar(2), ctx), 8, ctx);
    const HahnClassification cl = classify_hahn_family(fam, Scalar(5), 7);
    CHECK_FALSE(cl.report.pass());
    CHECK_FALSE(cl.report.find("structure-extraction")->passed);
  }

  SUBCASE("preconditions") {
    const OPSFamily fam = OPSFamily::build(asc, 4, ctx);
    CHECK_THROWS_AS(classify_hahn_family(fam, Scalar(0), 1), PreconditionError);
    CHECK_THROWS_AS(classify_hahn_family(fam, Scalar(0), 6), PreconditionError);
  }
}

TEST_CASE("form product identity in the adjoint base") {
  // D*(f u) = D*f u + f((x - omega)/q) D* u, with D* the adjoint-base operator.
  for (const QContext& ctx :
       {QContext::hahn_symbolic(Scalar(2)), QContext::hahn_rational(mpq_class(3, 4), mpq_class(-1, 2))}) {
    const QContext adj = starred(ctx);
    std::mt19937 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Scalar> m;
      for (int k = 0; k <= 10; ++k) m.push_back(ctx.lift(Scalar(static_cast<long>(rng() % 13) - 6)));
      const LinearForm u(std::move(m));
      const Poly f = random_poly(rng, ctx, 1 + trial % 3);
      const LinearForm lhs = dqw_dual(mul_poly(f, u), adj);
      const Poly f_shift = compose_linear(f, ctx.q().inverse(), -ctx.omega() / ctx.q());
      const LinearForm rhs = mul_poly(dqw(f, adj), u) + mul_poly(f_shift, dqw_dual(u, adj));
      const FormComparison cmp = compare_forms(lhs, rhs);
      CHECK(cmp.equal);
      CHECK(cmp.checked_to >= 10 - f.degree());
    }
  }
}
