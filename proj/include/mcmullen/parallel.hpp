#pragma once

#include <cstddef>
#include <functional>

namespace mcmullen {

/// Worker count for a request: 0 means hardware concurrency, never below 1.
int resolve_threads(int requested);

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(begin, end) for each. Callers write results by index, so the outcome
/// never depends on the schedule. The first exception thrown is rethrown.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace mcmullen
