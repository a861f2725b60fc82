#include "sqg/util.hpp"

#include <algorithm>

namespace sqg {

namespace {
int g_threads = 1;
}

int worker_threads() { return g_threads; }

void set_worker_threads(int n) { g_threads = std::max(1, n); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn)
{
    const int nt = g_threads;
    if (nt <= 1 || n < 2048) {
        fn(0, n);
        return;
    }
    const std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        const std::size_t b = std::min(n, t * chunk);
        const std::size_t e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
    for (auto& th : pool) th.join();
}

} // namespace sqg
