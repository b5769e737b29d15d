#pragma once

#include <cstddef>
#include <functional>

namespace qcorr {

// Runs fn(0) ... fn(n-1) on a bounded pool of worker threads pulling from a
// shared atomic counter.  Every index runs exactly once; execution order is
// unspecified, so work items must be independent (each typically writes its
// own output slot).  n_threads == 0 selects hardware concurrency.  The first
// exception thrown by any item is rethrown on the caller's thread after the
// pool drains.
void parallel_for(std::size_t n, unsigned n_threads, const std::function<void(std::size_t)>& fn);

}  // namespace qcorr
