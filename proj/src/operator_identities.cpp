#include <functional>
#include <map>

#include "qsemi/awops.hpp"
#include "qsemi/linform.hpp"
#include "qsemi/sampling.hpp"

namespace qsemi {

namespace {

struct Tally {
  int first_failure = -1;
  nlohmann::json witness;
};

void record(Tally& t, int trial, bool ok, const std::function<nlohmann::json()>& witness) {
  if (ok || t.first_failure >= 0) return;
  t.first_failure = trial;
  t.witness = witness();
}

LinearForm dq_power(const LinearForm& u, int n, const QContext& ctx) {
  LinearForm r = u;
  for (int i = 0; i < n; ++i) r = dq_form(r, ctx);
  return r;
}

}  // namespace

Report verify_operator_identities(int deg_bound, int trials, std::uint64_t seed, const QContext& ctx) {
  if (deg_bound < 1) throw PreconditionError("deg_bound must be at least 1");
  if (ctx.kind() != OperatorKind::AskeyWilson)
    throw PreconditionError("operator identities need an Askey-Wilson context");

  const std::vector<std::string> names = {
      "product-rule-D",      "product-rule-S",     "f-times-Dg",
      "D-of-f-times-form",   "S-of-f-times-form",  "f-times-D-of-form",
      "f-times-S-of-form",   "D^n-S-commutation"};
  std::map<std::string, Tally> tally;

  const StructuralPolys sp = structural_polys(ctx);
  const Scalar a = ctx.alpha(), ainv = a.inverse();
  const int form_depth = 2 * deg_bound + 8;
  Sampler sampler(seed, ctx);

  for (int trial = 1; trial <= trials; ++trial) {
    const Poly f = sampler.poly(deg_bound);
    const Poly g = sampler.poly(deg_bound);
    const LinearForm u = sampler.form(form_depth);
    auto poly_witness = [&] {
      return nlohmann::json{{"trial", trial}, {"f", format_poly(f)}, {"g", format_poly(g)}};
    };

    const Poly Df = dq(f, ctx), Sf = sq(f, ctx), Dg = dq(g, ctx), Sg = sq(g, ctx);

    record(tally["product-rule-D"], trial, dq(f * g, ctx) == Df * Sg + Sf * Dg, poly_witness);
    record(tally["product-rule-S"], trial, sq(f * g, ctx) == Df * Dg * sp.U2 + Sf * Sg,
           poly_witness);
    {
      Poly rhs = dq((Sf - sp.U1 * Df * ainv) * g, ctx) - sq(g * Df, ctx) * ainv;
      record(tally["f-times-Dg"], trial, f * Dg == rhs, poly_witness);
    }

    const LinearForm Du = dq_form(u, ctx), Su = sq_form(u, ctx);
    auto form_check = [&](const std::string& name, const LinearForm& lhs, const LinearForm& rhs) {
      FormComparison cmp = compare_forms(lhs, rhs);
      bool ok = cmp.equal && cmp.checked_to >= 0;
      record(tally[name], trial, ok, [&] {
        nlohmann::json w = poly_witness();
        w["checked_to"] = cmp.checked_to;
        if (cmp.first_mismatch) w["first_mismatch_degree"] = *cmp.first_mismatch;
        return w;
      });
    };

    form_check("D-of-f-times-form", a * dq_form(mul_poly(f, u), ctx),
               mul_poly(Sf * a - sp.U1 * Df, Du) + mul_poly(Df, Su));
    form_check("S-of-f-times-form", a * sq_form(mul_poly(f, u), ctx),
               mul_poly((sp.U2 * (a * a) - sp.U1 * sp.U1) * Df, Du) +
                   mul_poly(Sf * a + sp.U1 * Df, Su));
    form_check("f-times-D-of-form", mul_poly(f, Du),
               dq_form(mul_poly(Sf, u), ctx) - sq_form(mul_poly(Df, u), ctx));
    form_check("f-times-S-of-form", mul_poly(f, Su),
               sq_form(mul_poly(Sf, u), ctx) - dq_form(mul_poly(sp.U2 * Df, u), ctx));

    bool comm_ok = true;
    nlohmann::json comm_w;
    for (int n = 0; n <= 3 && comm_ok; ++n) {
      LinearForm Dn = dq_power(u, n, ctx);
      LinearForm lhs = a * dq_power(Su, n, ctx);
      LinearForm rhs = ctx.alpha_n(n + 1) * sq_form(Dn, ctx) +
                       mul_poly(sp.U1 * ctx.gamma_n(n), dq_form(Dn, ctx));
      FormComparison cmp = compare_forms(lhs, rhs);
      if (!cmp.equal) {
        comm_ok = false;
        comm_w = {{"trial", trial}, {"n", n}, {"first_mismatch_degree", *cmp.first_mismatch}};
      }
    }
    record(tally["D^n-S-commutation"], trial, comm_ok, [&] { return comm_w; });
  }

  Report rep("operator-identities");
  rep.config() = {{"mode", to_string(ctx.mode())},
                  {"deg_bound", deg_bound},
                  {"trials", trials},
                  {"seed", seed},
                  {"form_depth", form_depth}};
  for (const auto& name : names) {
    const Tally& t = tally[name];
    Check c = Check::pass(name).range(1, trials);
    if (t.first_failure >= 0) c.failure_at(t.first_failure).with_witness(t.witness);
    rep.add(std::move(c));
  }
  return rep;
}

}  // namespace qsemi
