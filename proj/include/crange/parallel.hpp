#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace crange {

/// Number of worker threads to use. Honors the CRANGE_THREADS environment
/// variable; falls back to the hardware concurrency.
inline int thread_budget() {
    if (const char* env = std::getenv("CRANGE_THREADS")) {
        int requested = std::atoi(env);
        if (requested >= 1) return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count). Work is split into contiguous blocks,
/// one per thread. fn must be safe to call concurrently for distinct i.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    int threads = std::min<std::size_t>(thread_budget(), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::size_t block = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * block;
        std::size_t hi = std::min(count, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace crange
