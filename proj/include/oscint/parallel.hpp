#pragma once

#include <cstddef>
#include <functional>

namespace oscint {

/// Worker count: OSCINT_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, count) on up to thread_count() threads. Indices
/// are handed out dynamically; the first exception thrown is rethrown after
/// all workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace oscint
