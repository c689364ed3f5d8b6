#pragma once

#include <cstddef>
#include <functional>

namespace hypersketch {

// Worker cap: min(hardware_concurrency, HYPERSKETCH_THREADS); at least 1.
int worker_count();

// Runs f(i) for i in [0,count) on up to worker_count() threads with static
// chunking. Callers own determinism: write results into per-index slots.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f);

}  // namespace hypersketch
