#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ssna {

inline unsigned effective_threads(int requested) {
    if (requested > 0) return static_cast<unsigned>(requested);
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

// Static block partition of [0, n). Each index is processed exactly once and
// body(i) must only write to per-index state, so results do not depend on the
// thread count.
template <typename Body>
void parallel_for(std::size_t n, int threads, Body&& body) {
    const unsigned nt = effective_threads(threads);
    if (nt <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        if (lo >= n) break;
        const std::size_t hi = std::min(n, lo + chunk);
        pool.emplace_back([&body, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace ssna
