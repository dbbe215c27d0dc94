#pragma once

#include <cstddef>
#include <functional>

namespace qprod {

/// Worker count: QPROD_THREADS if set and positive, otherwise the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, count) over up to `threads` workers with a static
/// partition. Results must be written to per-index slots by the caller.
/// The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = thread_count());

}  // namespace qprod
