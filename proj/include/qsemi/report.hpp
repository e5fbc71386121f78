#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qsemi {

/// One named pass/fail entry of a verification run.
struct Check {
  std::string name;
  bool passed = true;
  std::optional<std::pair<int, int>> n_range;
  std::optional<int> first_failure;
  std::string detail;
  nlohmann::json witness;

  static Check pass(std::string name, std::string detail = {});
  static Check fail(std::string name, std::string detail = {});
  Check& range(int lo, int hi);
  Check& failure_at(int n);
  Check& with_witness(nlohmann::json w);

  nlohmann::json to_json() const;
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  void set_suite(std::string s) { suite_ = std::move(s); }
  nlohmann::json& config() { return config_; }
  const nlohmann::json& config() const { return config_; }

  Check& add(Check c);
  /// Appends the checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& name) const;

  bool pass() const;
  nlohmann::json to_json() const;
  /// Human-readable one-line-per-check summary.
  std::string summary() const;

 private:
  std::string suite_;
  nlohmann::json config_ = nlohmann::json::object();
  std::vector<Check> checks_;
};

}  // namespace qsemi
