#pragma once

#include <cstddef>
#include <functional>

namespace darboux {

/// Worker count for sweeps: DARBOUX_THREADS if set and positive, otherwise
/// the hardware concurrency (at least 1).
std::size_t sweep_threads();

/// Calls body(i) for i in [0, count), spread over sweep_threads() workers.
/// Each index is handled exactly once; exceptions are rethrown on the caller
/// (the first one by index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace darboux
