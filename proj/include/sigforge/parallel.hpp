#pragma once

#include <cstddef>
#include <functional>

namespace sigforge {

// Worker cap: SIGFORGE_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t worker_count();

// Runs body(i) for i in [0, n). Each index runs exactly once; callers write
// results into per-index slots so output order never depends on scheduling.
// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sigforge
