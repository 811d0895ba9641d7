#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ncf {

/// Worker count: hardware concurrency, clamped by the NCF_THREADS variable.
inline unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("NCF_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Runs f(i) for i in [0, count) across the thread budget. Results must be
/// written to per-index slots so assembly order cannot matter.
template <class F>
void parallel_for(std::size_t count, F&& f) {
    unsigned workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([t, workers, count, &f] {
            for (std::size_t i = t; i < count; i += workers) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ncf
