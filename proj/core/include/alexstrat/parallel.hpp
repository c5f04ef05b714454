#pragma once

#include <cstddef>
#include <functional>

namespace alexstrat {

// Worker count: explicit argument if > 0, else the ALEXSTRAT_THREADS
// environment variable, else hardware concurrency (at least 1).
unsigned resolve_thread_count(unsigned requested = 0);

// Runs fn(0..n-1) across `threads` workers (strided). Results must be
// written to per-index slots so the outcome is identical for any worker
// count. The first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace alexstrat
