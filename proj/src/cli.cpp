#include "qsemi/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qsemi/awops.hpp"
#include "qsemi/expr_parser.hpp"
#include "qsemi/families.hpp"
#include "qsemi/hahn.hpp"
#include "qsemi/scan.hpp"
#include "qsemi/structure.hpp"
#include "qsemi/suites.hpp"

namespace qsemi {

namespace {

struct RunConfig {
  std::string mode = "symbolic";
  std::string op = "askey-wilson";
  std::string t, q, omega = "0";
  int N = 40;
  std::uint64_t seed = 1;
  std::string out;
  bool no_timestamps = false;
  int jobs = 1;
};

// Signals an input problem that maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

mpq_class parse_rational(const std::string& text, const char* flag) {
  try {
    mpq_class v(text, 10);
    v.canonicalize();
    return v;
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(flag) + ": not a rational number: " + text);
  }
}

QContext make_context(const RunConfig& cfg, OperatorKind kind) {
  if (cfg.mode != "symbolic" && cfg.mode != "rational") throw UsageError("--mode must be symbolic or rational");
  const bool symbolic = cfg.mode == "symbolic";
  if (kind == OperatorKind::AskeyWilson) {
    if (symbolic) return QContext::askey_wilson_symbolic();
    if (cfg.t.empty()) throw UsageError("rational Askey-Wilson mode needs --t");
    return QContext::askey_wilson_rational(parse_rational(cfg.t, "--t"));
  }
  if (symbolic) {
    const QContext probe = QContext::hahn_symbolic(Scalar(0));
    return QContext::hahn_symbolic(parse_scalar(cfg.omega, probe));
  }
  if (cfg.q.empty()) throw UsageError("rational Hahn mode needs --q");
  return QContext::hahn_rational(parse_rational(cfg.q, "--q"), parse_rational(cfg.omega, "--omega"));
}

OperatorKind operator_kind(const RunConfig& cfg) {
  if (cfg.op == "askey-wilson") return OperatorKind::AskeyWilson;
  if (cfg.op == "hahn") return OperatorKind::Hahn;
  throw UsageError("--operator must be askey-wilson or hahn");
}

FamilyFile load_family(const std::string& path, const RunConfig& cfg, bool n_given) {
  FamilyFile ff = load_family_file(path);
  if (n_given) ff.N = cfg.N;
  return ff;
}

nlohmann::json family_config(const FamilyFile& ff) {
  return {{"family", ff.spec.name}, {"params", ff.spec.params}, {"N", ff.N}};
}

void emit(Report& rep, const RunConfig& cfg) {
  nlohmann::json j = rep.to_json();
  if (!cfg.no_timestamps) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = buf;
  }
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
  }
  std::cerr << rep.summary();
}

Report classify_family(const FamilyFile& ff, const std::string& phi_text) {
  const QContext& ctx = ff.ctx;
  if (ctx.kind() != OperatorKind::AskeyWilson) throw UsageError("classify needs an Askey-Wilson family file");
  const Poly phi = parse_poly(phi_text, ctx);
  const OPSFamily fam = OPSFamily::build(ff.spec, ff.N + std::max(phi.degree(), 0) + 1, ctx);
  const BandRelation band = extract_band(fam, phi, ff.N);
  Report rep("classify");
  rep.config() = family_config(ff);
  rep.config()["phi"] = format_poly(phi);
  rep.config()["s"] = band.s;
  const NormalResult nr = normal_form_pipeline(band, fam, ff.N);
  rep.merge(nr.report);
  rep.config()["Q_s"] = format_poly(nr.Q_s);
  rep.config()["pearson"] = pair_to_json(PearsonPair{nr.R_s1, nr.Q_s});
  rep.config()["normal"] = pair_to_json(nr.normal);
  rep.config()["classification"] = nr.cls.to_json();
  return rep;
}

Report band_report(const FamilyFile& ff, const std::string& phi_text) {
  const QContext& ctx = ff.ctx;
  if (ctx.kind() != OperatorKind::AskeyWilson) throw UsageError("band needs an Askey-Wilson family file");
  const Poly phi = parse_poly(phi_text, ctx);
  const OPSFamily fam = OPSFamily::build(ff.spec, ff.N + std::max(phi.degree(), 0) + 1, ctx);
  const BandRelation band = extract_band(fam, phi, ff.N);
  Report rep("band");
  rep.config() = family_config(ff);
  rep.config()["band"] = band.to_json();
  Check exact = Check::pass("s-exact");
  if (auto gap = band.exactness_gap()) exact = Check::fail("s-exact").failure_at(*gap);
  exact.range(band.s, ff.N);
  rep.add(exact);
  return rep;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Exact verification of semiclassical orthogonal polynomial identities"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--mode", cfg.mode, "symbolic or rational")->capture_default_str();
  app.add_option("--operator", cfg.op, "askey-wilson or hahn (regularity)")->capture_default_str();
  app.add_option("--t", cfg.t, "t = q^{1/2} in rational Askey-Wilson mode");
  app.add_option("--q", cfg.q, "q in rational Hahn mode");
  app.add_option("--omega", cfg.omega, "omega of the Hahn operator")->capture_default_str();
  CLI::Option* n_opt = app.add_option("--N", cfg.N, "largest index checked")->capture_default_str()->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");
  app.add_flag("--no-timestamps", cfg.no_timestamps, "omit the timestamp field");
  app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.fallthrough();

  int trials = 100, deg = 8;
  auto* identities = app.add_subcommand("verify-lemma25", "operator product and transposition identities");
  identities->add_option("--trials", trials)->capture_default_str();
  identities->add_option("--deg", deg, "degree bound")->capture_default_str();

  auto* counterexample = app.add_subcommand("suite-prop41", "class-two counterexample family");
  auto* second_order = app.add_subcommand("suite-cor43", "second-order relation of the counterexample");
  auto* classical = app.add_subcommand("suite-classical", "classical reference family");
  HahnSuiteParams hp;
  auto* hahn = app.add_subcommand("suite-hahn-prop66", "class-one Hahn example and Al-Salam-Carlitz checks");
  hahn->add_option("--a", hp.a)->capture_default_str();
  hahn->add_option("--b", hp.b)->capture_default_str();
  hahn->add_option("--r", hp.r)->capture_default_str();
  hahn->add_option("--s", hp.s)->capture_default_str();

  std::string family, phi, psi, c = "0";
  auto* classify = app.add_subcommand("classify", "class of a family via its structure relation");
  classify->add_option("--family", family, "family file")->required();
  classify->add_option("--phi", phi, "polynomial phi")->required();
  auto* band = app.add_subcommand("band", "band of phi D P_n in the P-basis");
  band->add_option("--family", family, "family file")->required();
  band->add_option("--phi", phi, "polynomial phi")->required();
  auto* regularity = app.add_subcommand("regularity", "regularity criterion for a Pearson pair");
  regularity->add_option("--phi", phi, "polynomial of degree <= 2")->required();
  regularity->add_option("--psi", psi, "polynomial of degree <= 1")->required();
  auto* hclassify = app.add_subcommand("hahn-classify", "classifier for the (x - c) structure relation");
  hclassify->add_option("--family", family, "family file")->required();
  hclassify->add_option("--c", c, "the constant c")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    set_worker_count(cfg.jobs);
    const bool n_given = n_opt->count() > 0;
    Report rep;
    if (identities->parsed()) {
      rep = verify_operator_identities(deg, trials, cfg.seed, make_context(cfg, OperatorKind::AskeyWilson));
    } else if (counterexample->parsed()) {
      rep = run_counterexample_suite(cfg.N, make_context(cfg, OperatorKind::AskeyWilson));
    } else if (second_order->parsed()) {
      rep = run_second_order_suite(cfg.N, make_context(cfg, OperatorKind::AskeyWilson));
    } else if (classical->parsed()) {
      rep = run_classical_reference_suite(cfg.N, make_context(cfg, OperatorKind::AskeyWilson));
    } else if (hahn->parsed()) {
      rep = run_hahn_class_one_suite(cfg.N, make_context(cfg, OperatorKind::Hahn), hp);
    } else if (classify->parsed()) {
      rep = classify_family(load_family(family, cfg, n_given), phi);
    } else if (band->parsed()) {
      rep = band_report(load_family(family, cfg, n_given), phi);
    } else if (regularity->parsed()) {
      const QContext ctx = make_context(cfg, operator_kind(cfg));
      const Poly f = parse_poly(phi, ctx), g = parse_poly(psi, ctx);
      rep = Report("regularity");
      rep.config() = {{"phi", format_poly(f)}, {"psi", format_poly(g)}, {"N", cfg.N}, {"operator", cfg.op}};
      rep.add(ctx.kind() == OperatorKind::Hahn ? hahn_regularity(f, g, cfg.N, ctx)
                                               : regularity_criterion(f, g, cfg.N, ctx));
    } else if (hclassify->parsed()) {
      const FamilyFile ff = load_family(family, cfg, n_given);
      if (ff.ctx.kind() != OperatorKind::Hahn) throw UsageError("hahn-classify needs a Hahn family file");
      const OPSFamily fam = OPSFamily::build(ff.spec, ff.N, ff.ctx);
      HahnClassification cl = classify_hahn_family(fam, parse_scalar(c, ff.ctx), ff.N);
      rep = std::move(cl.report);
      rep.config()["family"] = family_config(ff);
      rep.config()["verdict"] = to_string(cl.verdict);
      rep.config()["class"] = cl.cls;
    }
    emit(rep, cfg);
    return rep.pass() ? 0 : 1;
  } catch (const NotRegular& e) {
    std::cerr << "error: " << e.what() << " (n = " << e.index() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qsemi
