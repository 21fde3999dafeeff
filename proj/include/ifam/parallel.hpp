#pragma once

#include <cstddef>
#include <functional>

namespace ifam {

/// Worker count used by the parallel loops in this library.
///
/// Resolution order: set_worker_count() override, then the IFAM_WORKERS
/// environment variable, then std::thread::hardware_concurrency(). Results of
/// every operation are independent of this value.
std::size_t worker_count();
/// 0 clears the override.
void set_worker_count(std::size_t workers);

/// Calls body(i) for i in [0, n) across worker_count() threads. `body` must
/// write only to slot i of caller-owned storage. An exception thrown
/// by a call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace ifam
