#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace unitals {

/// Worker count: UNITOOL_THREADS when set, otherwise the hardware count
/// clamped to [1, 8].
inline unsigned worker_count() {
    if (const char* env = std::getenv("UNITOOL_THREADS")) {
        const long v = std::atol(env);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (hw > 8 ? 8 : hw);
}

/// Runs fn(i) for i in [0, n); workers own disjoint index stripes so writes
/// to per-index result slots need no locking.  Falls back to a plain loop
/// for one worker.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    const unsigned workers = worker_count();
    if (workers <= 1 || n < 2 * workers) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace unitals
