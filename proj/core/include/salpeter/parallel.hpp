#pragma once

#include <cstddef>
#include <functional>

namespace salpeter {

/// Worker count: hardware concurrency, capped by SALPETER_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// handled by exactly one call, so per-index results do not depend on the
/// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace salpeter
