#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace sqg {

// Global worker count. Parallel loops use a static partition with no shared
// accumulators, so results are bitwise identical for any thread count.
int worker_threads();
void set_worker_threads(int n);

// Runs fn(begin, end) over disjoint chunks of [0, n).
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace sqg
