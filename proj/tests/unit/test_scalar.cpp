#include <map>
#include <random>

#include "doctest.h"
#include "qsemi/expr_parser.hpp"
#include "qsemi/int_poly.hpp"
#include "qsemi/qcontext.hpp"
#include "qsemi/sampling.hpp"

using namespace qsemi;

namespace {

// Independent Laurent-polynomial arithmetic over Q keyed by exponent.
using Laurent = std::map<int, mpq_class>;

Laurent lmul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (auto& [i, x] : a)
    for (auto& [j, y] : b) r[i + j] += x * y;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

// Reads a symbolic scalar with monomial denominator as a Laurent map.
Laurent as_laurent(const Scalar& s) {
  const RatFunc& r = s.ratfunc();
  REQUIRE(r.den().is_monomial());
  Laurent out;
  const int shift = r.den().degree();
  for (std::size_t i = 0; i < r.num().size(); ++i)
    if (r.num()[i] != 0) out[static_cast<int>(i) - shift] = mpq_class(r.num()[i], r.den().lc());
  for (auto& [k, v] : out) v.canonicalize();
  return out;
}

IntPoly random_intpoly(std::mt19937_64& rng, int deg, int bound) {
  std::vector<mpz_class> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = static_cast<long>(rng() % (2 * bound + 1)) - bound;
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Scalar a = Scalar::rational(mpq_class(1, 2)), b = Scalar::rational(mpq_class(1, 3));
  CHECK(a + b == Scalar::rational(mpq_class(5, 6)));
  CHECK((a / b).to_string() == "3/2");
  CHECK_THROWS_AS(a / Scalar::rational(0), DivisionByZero);
}

TEST_CASE("symbolic arithmetic reduces to canonical form") {
  Scalar t = Scalar::generator();
  CHECK((t / t).is_one());
  Scalar num = t * t - 1, den = t - 1;
  CHECK(num / den == t + 1);
  CHECK((num / den).to_string() == "t + 1");
  Scalar r = (t * t - 1) / (t * 4);
  CHECK(r.to_string() == "(t^2 - 1)/(4*t)");
  CHECK(((Scalar(1) - t * t * 3) / (t * 2)).to_string() == "(-3*t^2 + 1)/(2*t)");
  // Denominator leading coefficient is made positive.
  CHECK((Scalar(1) / (Scalar(1) - t)).to_string() == "-1/(t - 1)");
}

TEST_CASE("modes do not mix") {
  Scalar r = Scalar::rational(mpq_class(1, 2));
  Scalar s = Scalar::generator();
  CHECK_THROWS_AS(r + s, ModeMismatch);
  CHECK_NOTHROW(Scalar(3) + s);
  CHECK_NOTHROW(Scalar(3) + r);
  CHECK((Scalar(3) + r).is_typed());
}

TEST_CASE("coefficient symbols") {
  QContext ctx = QContext::askey_wilson_symbolic();
  Scalar t = ctx.t();
  CHECK(ctx.alpha_n(0).is_one());
  CHECK(ctx.gamma_n(0).is_zero());
  CHECK(ctx.gamma_n(1).is_one());
  CHECK(ctx.alpha_n(1) == (t + t.inverse()) / 2);
  CHECK(ctx.alpha_n(1) == ctx.alpha());
  CHECK(ctx.gamma_n(-1) == Scalar(-1));
  CHECK(ctx.alpha_n(-1) == ctx.alpha());
  // gamma_2 = t + 1/t = 2 alpha
  CHECK(as_laurent(ctx.gamma_n(2)) == Laurent{{-1, 1}, {1, 1}});
  CHECK(ctx.gamma_n(2) == ctx.alpha() * 2);
  CHECK(ctx.q_bracket(0).is_zero());
  CHECK(ctx.q_bracket(3) == Scalar(1) + ctx.q() + ctx.q() * ctx.q());
}

TEST_CASE("gamma_n times (t - 1/t) is t^n - t^-n (Laurent oracle)") {
  QContext ctx = QContext::askey_wilson_symbolic();
  const Laurent diff{{1, 1}, {-1, -1}};
  for (int n = 1; n <= 30; ++n) {
    Laurent expected{{n, 1}, {-n, -1}};
    CHECK(lmul(as_laurent(ctx.gamma_n(n)), diff) == expected);
    Laurent alpha_expected{{n, mpq_class(1, 2)}, {-n, mpq_class(1, 2)}};
    CHECK(as_laurent(ctx.alpha_n(n)) == alpha_expected);
  }
}

TEST_CASE("rational Askey-Wilson context validates t") {
  CHECK_THROWS_AS(QContext::askey_wilson_rational(1), PreconditionError);
  CHECK_THROWS_AS(QContext::askey_wilson_rational(-1), PreconditionError);
  CHECK_THROWS_AS(QContext::askey_wilson_rational(0), PreconditionError);
  QContext c = QContext::askey_wilson_rational(mpq_class(1, 2));
  CHECK(c.q() == Scalar::rational(mpq_class(1, 4)));
  CHECK(c.alpha() == Scalar::rational(mpq_class(5, 4)));
  CHECK_THROWS_AS(QContext::hahn_rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(QContext::hahn_rational(0, 1), PreconditionError);
  CHECK_NOTHROW(QContext::hahn_rational(1, 1));
}

TEST_CASE("parse_scalar") {
  QContext ctx = QContext::askey_wilson_symbolic();
  Scalar s = parse_scalar("(t^2-1)/(4*t)", ctx);
  CHECK(s.ratfunc().num() == IntPoly({-1, 0, 1}));
  CHECK(s.ratfunc().den() == IntPoly({0, 4}));
  CHECK(parse_scalar("-3/4", ctx) == Scalar::constant(mpq_class(-3, 4)));
  CHECK_THROWS_AS(parse_scalar("1/(t-t)", ctx), DivisionByZero);
  CHECK(parse_scalar("t^-2", ctx) == ctx.t_pow(-2));
  CHECK(parse_scalar("t^(-2) * t^2", ctx).is_one());
  CHECK(parse_scalar("q", ctx) == ctx.t_pow(2));
  CHECK(parse_scalar("2*alpha", ctx) == ctx.gamma_n(2));
  try {
    parse_scalar("1 + * 2", ctx);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_scalar("x + 1", ctx), ParseError);
  CHECK_THROWS_AS(parse_scalar("foo", ctx), ParseError);
  CHECK_THROWS_AS(parse_scalar("(1 + t", ctx), ParseError);

  QContext rc = QContext::askey_wilson_rational(mpq_class(1, 2));
  CHECK(parse_scalar("(t^2-1)/(4*t)", rc) == Scalar::rational(mpq_class(-3, 8)));
}

TEST_CASE("field axioms on random triples") {
  QContext ctx = QContext::askey_wilson_symbolic();
  Sampler s(7, ctx);
  for (int i = 0; i < 200; ++i) {
    Scalar a = s.scalar(), b = s.scalar(), c = s.nonzero_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((c * c.inverse()).is_one());
    CHECK((a - a).is_zero());
    CHECK((a / c) * c == a);
  }
}

TEST_CASE("parse of format is the identity") {
  QContext ctx = QContext::askey_wilson_symbolic();
  Sampler s(11, ctx);
  for (int i = 0; i < 200; ++i) {
    Scalar a = s.scalar() * s.scalar() + s.scalar() / s.nonzero_scalar();
    if (i % 3 == 0) a = a / (s.scalar() + ctx.t_pow(3));
    CHECK(parse_scalar(format_scalar(a), ctx) == a);
  }
  QContext rc = QContext::askey_wilson_rational(mpq_class(3, 5));
  Sampler r(11, rc);
  for (int i = 0; i < 100; ++i) {
    Scalar a = r.scalar();
    CHECK(parse_scalar(format_scalar(a), rc) == a);
  }
}

TEST_CASE("specialization is a homomorphism") {
  QContext sym = QContext::askey_wilson_symbolic();
  for (mpq_class t : {mpq_class(1, 2), mpq_class(3, 5), mpq_class(-7, 3)}) {
    QContext rat = QContext::askey_wilson_rational(t);
    Sampler ss(23, sym), rs(23, rat);
    for (int i = 0; i < 100; ++i) {
      Scalar a = ss.scalar(), b = ss.scalar(), c = ss.nonzero_scalar();
      Scalar ra = rs.scalar(), rb = rs.scalar(), rc = rs.nonzero_scalar();
      REQUIRE(a.evaluate_at(t) == ra);
      CHECK(((a * b + c) / c).evaluate_at(t) == (ra * rb + rc) / rc);
      CHECK((a - b * b).evaluate_at(t) == ra - rb * rb);
    }
    CHECK(sym.gamma_n(7).evaluate_at(t) == rat.gamma_n(7));
    CHECK(sym.alpha_n(5).evaluate_at(t) == rat.alpha_n(5));
  }
}

TEST_CASE("integer polynomial kernels") {
  std::mt19937_64 rng(5);
  SUBCASE("Kronecker product agrees with schoolbook") {
    for (int i = 0; i < 40; ++i) {
      int da = static_cast<int>(rng() % 60), db = static_cast<int>(rng() % 60);
      int bound = i % 2 ? 3 : 1000000;
      IntPoly a = random_intpoly(rng, da, bound), b = random_intpoly(rng, db, bound);
      a = a.scaled(mpz_class("123456789012345678901234567890"));
      CHECK(multiply_kronecker(a, b) == multiply_schoolbook(a, b));
      CHECK(multiply_kronecker(-a, b) == multiply_schoolbook(-a, b));
    }
  }
  SUBCASE("exact division") {
    for (int i = 0; i < 30; ++i) {
      IntPoly a = random_intpoly(rng, static_cast<int>(rng() % 20), 50);
      IntPoly b = random_intpoly(rng, static_cast<int>(rng() % 10), 50);
      auto q = divide_exact(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
    CHECK_FALSE(divide_exact(IntPoly({1, 0, 1}), IntPoly({-1, 1})).has_value());
  }
  SUBCASE("gcd recovers a planted common factor") {
    for (int i = 0; i < 30; ++i) {
      IntPoly g = primitive_part(random_intpoly(rng, 1 + static_cast<int>(rng() % 6), 20));
      IntPoly a = random_intpoly(rng, static_cast<int>(rng() % 15), 20) * g;
      IntPoly b = random_intpoly(rng, static_cast<int>(rng() % 15), 20) * g;
      IntPoly h = gcd(a, b);
      CHECK(divide_exact(h, g).has_value());
      CHECK(divide_exact(a, h).has_value());
      CHECK(divide_exact(b, h).has_value());
      IntPoly prs = gcd_primitive_prs(primitive_part(a), primitive_part(b));
      CHECK(primitive_part(h) == prs);
    }
    CHECK(gcd(IntPoly({-1, 0, 1}), IntPoly({-1, 1})) == IntPoly({-1, 1}));
    CHECK(gcd(IntPoly({1, 0, 1}), IntPoly({-1, 1})).is_one());
    CHECK(gcd(IntPoly({0, 0, 6}), IntPoly({0, 4})) == IntPoly({0, 2}));
  }
  SUBCASE("evaluation") {
    IntPoly p({1, -2, 3});
    CHECK(p.evaluate(mpq_class(1, 2)) == mpq_class(1, 4) * 3 - 1 + 1);
    CHECK(p.to_string() == "3*t^2 - 2*t + 1");
  }
}
