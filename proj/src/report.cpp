#include "qsemi/report.hpp"

#include <sstream>

namespace qsemi {

Check Check::pass(std::string name, std::string detail) {
  Check c;
  c.name = std::move(name);
  c.passed = true;
  c.detail = std::move(detail);
  return c;
}

Check Check::fail(std::string name, std::string detail) {
  Check c = pass(std::move(name), std::move(detail));
  c.passed = false;
  return c;
}

Check& Check::range(int lo, int hi) {
  n_range = std::make_pair(lo, hi);
  return *this;
}

Check& Check::failure_at(int n) {
  passed = false;
  first_failure = n;
  return *this;
}

Check& Check::with_witness(nlohmann::json w) {
  witness = std::move(w);
  return *this;
}

nlohmann::json Check::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["status"] = passed ? "pass" : "fail";
  if (n_range)
    j["n_range"] = {n_range->first, n_range->second};
  else
    j["n_range"] = nullptr;
  if (first_failure) j["first_failure"] = *first_failure;
  if (!detail.empty()) j["detail"] = detail;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

Check& Report::add(Check c) {
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::pass() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite_;
  j["config"] = config_;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks_) arr.push_back(c.to_json());
  j["checks"] = arr;
  j["pass"] = pass();
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks_) {
    os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name;
    if (c.n_range) os << "  n=" << c.n_range->first << ".." << c.n_range->second;
    if (c.first_failure) os << "  first failure at n=" << *c.first_failure;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace qsemi
