#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "qsemi/cli.hpp"

namespace {

namespace fs = std::filesystem;

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "qsemi");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return qsemi::run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string data(const std::string& name) { return std::string(QSEMI_TEST_DATA) + "/" + name; }

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("qsemi_cli_" + name); }

nlohmann::json read_json(const fs::path& p) {
  std::ifstream f(p);
  return nlohmann::json::parse(f);
}

std::string read_text(const fs::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST_CASE("band export of the counterexample family") {
  const fs::path out = scratch("band.json");
  CHECK(run({"--no-timestamps", "--out", out.string(), "band", "--family", data("prop41.json"), "--phi", "U2"}) == 0);
  const nlohmann::json j = read_json(out);
  CHECK(j["suite"] == "band");
  CHECK(j["pass"] == true);
  CHECK(j["config"]["band"]["offsets"] == nlohmann::json::array({-3, -1, 1}));
  CHECK(j["config"]["band"]["s"] == 3);
  CHECK_FALSE(j.contains("timestamp"));
}

TEST_CASE("report schema and determinism") {
  const fs::path a = scratch("a.json"), b = scratch("b.json");
  const std::vector<std::string> tail = {"--mode", "rational", "--t", "1/2", "--N", "8", "--no-timestamps"};
  auto args = [&](const fs::path& p) {
    std::vector<std::string> v = tail;
    v.insert(v.end(), {"--out", p.string(), "suite-prop41"});
    return v;
  };
  CHECK(run(args(a)) == 0);
  CHECK(run(args(b)) == 0);
  CHECK(read_text(a) == read_text(b));
  const nlohmann::json j = read_json(a);
  for (const char* key : {"suite", "config", "checks", "pass"}) CHECK(j.contains(key));
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("n_range"));
  }
  CHECK(j["config"]["t"] == "1/2");

  const fs::path stamped = scratch("stamped.json");
  CHECK(run({"--mode", "rational", "--t", "1/2", "--N", "6", "--out", stamped.string(), "suite-classical"}) == 0);
  CHECK(read_json(stamped).contains("timestamp"));
}

TEST_CASE("exit codes") {
  const std::string out = scratch("misc.json").string();
  // Check failure.
  CHECK(run({"--out", out, "--N", "8", "suite-cor43"}) == 1);
  // Usage and input errors.
  CHECK(run({"--out", out}) == 2);
  CHECK(run({"--out", out, "no-such-command"}) == 2);
  CHECK(run({"--out", out, "--mode", "rational", "suite-prop41"}) == 2);
  CHECK(run({"--out", out, "--mode", "rational", "--t", "abc", "suite-prop41"}) == 2);
  CHECK(run({"--out", out, "--mode", "sideways", "suite-prop41"}) == 2);
  CHECK(run({"--out", out, "band", "--family", data("malformed.json"), "--phi", "1"}) == 2);
  CHECK(run({"--out", out, "band", "--family", data("missing.json"), "--phi", "1"}) == 2);
  CHECK(run({"--out", out, "band", "--family", data("prop41.json"), "--phi", "x +"}) == 2);
  CHECK(run({"--out", out, "regularity", "--phi", "x^3", "--psi", "x"}) == 2);
  CHECK(run({"--out", out, "hahn-classify", "--family", data("prop41.json")}) == 2);
  // Regularity failure is a check failure, not an input error.
  CHECK(run({"--out", out, "--mode", "rational", "--t", "1/2", "regularity", "--phi", "x^2 + 1", "--psi", "0"}) == 1);
}

TEST_CASE("classification commands") {
  const fs::path out = scratch("classify.json");
  CHECK(run({"--no-timestamps", "--out", out.string(), "classify", "--family", data("prop41.json"), "--phi", "U2"}) == 0);
  nlohmann::json j = read_json(out);
  CHECK(j["config"]["classification"]["class"] == 2);
  CHECK(j["config"]["classification"]["verdict"] == "semiclassical");

  CHECK(run({"--out", out.string(), "classify", "--family", data("q_hermite_half.json"), "--phi", "1"}) == 0);
  CHECK(read_json(out)["config"]["classification"]["verdict"] == "classical");

  CHECK(run({"--out", out.string(), "hahn-classify", "--family", data("asc.json")}) == 0);
  j = read_json(out);
  CHECK(j["config"]["verdict"] == "classical");

  CHECK(run({"--out", out.string(), "band", "--family", data("table.json"), "--phi", "1"}) == 0);
  CHECK(read_json(out)["config"]["band"]["offsets"] == nlohmann::json::array({-1}));

  CHECK(run({"--out", out.string(), "--mode", "rational", "--q", "1/2", "--omega", "1", "--N", "6",
             "suite-hahn-prop66"}) == 0);
  CHECK(run({"--out", out.string(), "--mode", "rational", "--t", "1/2", "verify-lemma25", "--trials", "4", "--deg",
             "4"}) == 0);
}
