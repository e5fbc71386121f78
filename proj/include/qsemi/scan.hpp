#pragma once

#include <functional>
#include <optional>
#include <string>

#include "json.hpp"
#include "qsemi/report.hpp"
#include "qsemi/scalar.hpp"

namespace qsemi {

/// Number of worker threads used by per-n scans (default 1).
void set_worker_count(int n);
int worker_count();

/// Runs body(n) for lo <= n <= hi on the worker pool. The first exception
/// thrown by any body is rethrown after all workers finish.
void parallel_for(int lo, int hi, const std::function<void(int)>& body);

/// probe(n) returns a witness on failure and nothing on success. The check
/// records the smallest failing n.
Check scan_check(std::string name, int lo, int hi,
                 const std::function<std::optional<nlohmann::json>(int)>& probe);

/// Passes when residual(n) is zero for every n in range.
Check residual_check(std::string name, int lo, int hi,
                     const std::function<Scalar(int)>& residual);

}  // namespace qsemi
