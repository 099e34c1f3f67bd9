#pragma once

#include <cstddef>
#include <functional>

namespace eincausal {

/// Worker count: hardware concurrency capped by the EINCAUSAL_THREADS
/// environment variable (>= 1).
int worker_count();

/// Runs fn(i) for i in [0, count) across workers in contiguous chunks.
/// Callers must keep per-index work independent; all uses in this
/// library write disjoint slots, so results are schedule-independent.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace eincausal
