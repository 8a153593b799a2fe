#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace search::detail {

// Runs work(i, w) for every i < count on `workers` threads, w being the
// worker slot.  Items are handed out in chunks from a shared counter, so the
// assignment of items to slots varies; callers merge per-slot results in a
// way that does not depend on it.
template <class Work>
void parallel_for(std::size_t count, unsigned workers, Work&& work, std::size_t chunk = 16) {
    workers = std::max(1u, workers);
    std::atomic<std::size_t> next{0};
    auto body = [&](unsigned w) {
        for (;;) {
            std::size_t start = next.fetch_add(chunk);
            if (start >= count) break;
            for (std::size_t i = start; i < std::min(count, start + chunk); ++i) work(i, w);
        }
    };
    if (workers == 1) {
        body(0);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& t : pool) t.join();
}

}  // namespace search::detail
