#ifndef SPINSTAR_PARALLEL_HPP
#define SPINSTAR_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace spinstar {

/// Worker count: SPINSTAR_THREADS if set (positive integer), else
/// hardware concurrency.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) across workers. Iterations must be
/// independent; no ordering is guaranteed.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace spinstar

#endif
