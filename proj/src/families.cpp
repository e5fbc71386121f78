#include "qsemi/families.hpp"

#include <fstream>

#include "qsemi/expr_parser.hpp"

namespace qsemi {

namespace {

Scalar sign_pow(int n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

void require_kind(const QContext& ctx, OperatorKind k, const std::string& name) {
  if (ctx.kind() != k)
    throw PreconditionError("family '" + name + "' needs a " + to_string(k) + " context");
}

Scalar read_scalar(const nlohmann::json& v, const QContext& ctx) {
  if (v.is_number_integer()) return ctx.integer(v.get<long>());
  if (v.is_string()) return parse_scalar(v.get<std::string>(), ctx);
  throw PreconditionError("expected a scalar literal, got " + v.dump());
}

Scalar param(const nlohmann::json& params, const char* key, const QContext& ctx) {
  if (!params.contains(key))
    throw PreconditionError(std::string("missing family parameter '") + key + "'");
  return read_scalar(params.at(key), ctx);
}

}  // namespace

FamilySpec counterexample_family(const QContext& ctx) {
  require_kind(ctx, OperatorKind::AskeyWilson, "prop41");
  FamilySpec f;
  f.name = "prop41";
  f.B = [ctx](int) { return ctx.zero(); };
  f.C = [ctx](int n) {
    Scalar s = sign_pow(n);
    return (Scalar(1) - s * ctx.t_pow(n)) * (Scalar(1) - s * ctx.t_pow(n - 1)) / 4;
  };
  return f;
}

FamilySpec q_hermite_family(const QContext& ctx) {
  require_kind(ctx, OperatorKind::AskeyWilson, "q-hermite");
  FamilySpec f;
  f.name = "q-hermite";
  f.B = [ctx](int) { return ctx.zero(); };
  f.C = [ctx](int n) { return (Scalar(1) - ctx.q_pow(n)) / 4; };
  return f;
}

FamilySpec al_salam_carlitz_family(const Scalar& r, const Scalar& s, const QContext& ctx) {
  require_kind(ctx, OperatorKind::Hahn, "al-salam-carlitz");
  FamilySpec f;
  f.name = "al-salam-carlitz";
  f.params = {{"r", format_scalar(r)}, {"s", format_scalar(s)}};
  Scalar shift = ctx.omega() / (Scalar(1) - ctx.q());
  f.B = [ctx, r, s, shift](int n) { return shift + (r + s) * ctx.q_pow(n); };
  f.C = [ctx, r, s](int n) { return -r * s * (Scalar(1) - ctx.q_pow(n)) * ctx.q_pow(n - 1); };
  return f;
}

FamilySpec hahn_class_one_family(const Scalar& a, const Scalar& b, const QContext& ctx) {
  require_kind(ctx, OperatorKind::Hahn, "hahn-class1");
  FamilySpec f;
  f.name = "hahn-class1";
  f.params = {{"a", format_scalar(a)}, {"b", format_scalar(b)}};
  Scalar shift = ctx.omega() / (Scalar(1) - ctx.q());
  f.B = [shift](int) { return shift; };
  f.C = [ctx, a, b](int n) { return (a + sign_pow(n) * b - (a + b) * ctx.q_pow(n)) * ctx.q_pow(n); };
  return f;
}

FamilySpec table_family(std::string name, std::vector<Scalar> B, std::vector<Scalar> C) {
  if (C.empty() || !C[0].is_zero()) throw PreconditionError("table C[0] must be 0");
  FamilySpec f;
  f.name = std::move(name);
  f.available = static_cast<int>(std::min(B.size(), C.size())) - 1;
  f.B = [B](int n) { return B.at(static_cast<std::size_t>(n)); };
  f.C = [C](int n) { return C.at(static_cast<std::size_t>(n)); };
  return f;
}

FamilySpec registry_family(const std::string& name, const nlohmann::json& params,
                           const QContext& ctx) {
  if (name == "prop41") return counterexample_family(ctx);
  if (name == "q-hermite") return q_hermite_family(ctx);
  if (name == "al-salam-carlitz")
    return al_salam_carlitz_family(param(params, "r", ctx), param(params, "s", ctx), ctx);
  if (name == "hahn-class1")
    return hahn_class_one_family(param(params, "a", ctx), param(params, "b", ctx), ctx);
  throw PreconditionError("unknown family '" + name + "'");
}

FamilyFile parse_family_file(const nlohmann::json& j) {
  if (!j.is_object()) throw PreconditionError("family file must hold a JSON object");
  const std::string mode_s = j.value("mode", "symbolic");
  if (mode_s != "symbolic" && mode_s != "rational")
    throw PreconditionError("mode must be 'symbolic' or 'rational'");
  const Mode mode = mode_s == "symbolic" ? Mode::Symbolic : Mode::Rational;
  const std::string op = j.value("operator", "askey-wilson");

  // Literals for t, q and omega are read in a plain rational context first.
  QContext plain = QContext::askey_wilson_rational(2);
  auto rational_literal = [&](const char* key) -> mpq_class {
    if (!j.contains(key)) throw PreconditionError(std::string("missing field '") + key + "'");
    return read_scalar(j.at(key), plain).rational_value();
  };

  std::optional<QContext> ctx;
  if (op == "askey-wilson") {
    if (mode == Mode::Symbolic)
      ctx = QContext::askey_wilson_symbolic();
    else
      ctx = QContext::askey_wilson_rational(rational_literal("t"));
  } else if (op == "hahn") {
    if (mode == Mode::Symbolic) {
      QContext sym = QContext::hahn_symbolic(0);
      Scalar omega = j.contains("omega") ? read_scalar(j.at("omega"), sym) : sym.zero();
      Scalar q = j.contains("q") ? read_scalar(j.at("q"), sym) : sym.t();
      ctx = QContext::hahn(Mode::Symbolic, q, omega);
    } else {
      mpq_class omega = j.contains("omega") ? rational_literal("omega") : mpq_class(0);
      ctx = QContext::hahn_rational(rational_literal("q"), omega);
    }
  } else {
    throw PreconditionError("operator must be 'askey-wilson' or 'hahn'");
  }

  FamilyFile out{*ctx, FamilySpec{}, j.value("N", 40)};
  if (!j.contains("family")) throw PreconditionError("missing field 'family'");
  const auto& fam = j.at("family");
  if (fam.is_string()) {
    out.spec = registry_family(fam.get<std::string>(), j.value("params", nlohmann::json::object()),
                               out.ctx);
  } else if (fam.is_object()) {
    std::vector<Scalar> B, C;
    for (const auto& v : fam.at("B")) B.push_back(read_scalar(v, out.ctx));
    for (const auto& v : fam.at("C")) C.push_back(read_scalar(v, out.ctx));
    out.spec = table_family(fam.value("name", "table"), std::move(B), std::move(C));
  } else {
    throw PreconditionError("'family' must be a registry name or a {B, C} table");
  }
  return out;
}

FamilyFile load_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open family file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError("malformed family file '" + path + "': " + e.what());
  }
  return parse_family_file(j);
}

}  // namespace qsemi
