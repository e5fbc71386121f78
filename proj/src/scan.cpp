#include "qsemi/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace qsemi {

namespace {
std::atomic<int> g_workers{1};
}

void set_worker_count(int n) { g_workers = std::max(1, n); }
int worker_count() { return g_workers; }

void parallel_for(int lo, int hi, const std::function<void(int)>& body) {
  if (hi < lo) return;
  const int workers = std::min(worker_count(), hi - lo + 1);
  if (workers <= 1) {
    for (int n = lo; n <= hi; ++n) body(n);
    return;
  }
  std::atomic<int> next{lo};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (int n = next++; n <= hi; n = next++) {
      try {
        body(n);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = hi + 1;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < workers; ++i) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Check scan_check(std::string name, int lo, int hi,
                 const std::function<std::optional<nlohmann::json>(int)>& probe) {
  std::map<int, nlohmann::json> failures;
  std::mutex m;
  parallel_for(lo, hi, [&](int n) {
    auto w = probe(n);
    if (!w) return;
    std::lock_guard<std::mutex> lock(m);
    failures.emplace(n, std::move(*w));
  });
  if (failures.empty()) return Check::pass(std::move(name)).range(lo, hi);
  Check c = Check::fail(std::move(name)).range(lo, hi);
  c.failure_at(failures.begin()->first).with_witness(failures.begin()->second);
  c.detail = std::to_string(failures.size()) + " failing index(es)";
  return c;
}

Check residual_check(std::string name, int lo, int hi,
                     const std::function<Scalar(int)>& residual) {
  return scan_check(std::move(name), lo, hi, [&](int n) -> std::optional<nlohmann::json> {
    Scalar r = residual(n);
    if (r.is_zero()) return std::nullopt;
    return nlohmann::json{{"n", n}, {"residual", format_scalar(r)}};
  });
}

}  // namespace qsemi
