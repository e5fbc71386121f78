#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "qsemi/scalar.hpp"

namespace qsemi::detail {

struct MonomialImages;

/// Shared mutable caches behind a QContext; guarded by `mutex`.
struct ContextState {
  std::mutex mutex;
  std::map<int, Scalar> t_pows;
  std::shared_ptr<MonomialImages> images;
};

}  // namespace qsemi::detail
