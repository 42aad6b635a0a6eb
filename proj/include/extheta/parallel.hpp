#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace extheta {

// Runs fn(i) for i in [0, n) on up to `threads` workers.  Callers store
// results into per-index slots, so the output is identical for any thread
// count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    unsigned use = std::min<std::size_t>(threads, n);
    pool.reserve(use);
    for (unsigned t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace extheta
