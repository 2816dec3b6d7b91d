// Deterministic fork-join helper: every index writes only its own slot, so
// results are independent of the thread count and of scheduling.

#ifndef COMBWALK_PARALLEL_HPP
#define COMBWALK_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace combwalk {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [begin, end) on `threads` workers. Work is handed
/// out via an atomic cursor in chunks; fn must only touch state owned by
/// index i.
template <class Fn>
void parallel_for(std::int64_t begin, std::int64_t end, unsigned threads,
                  Fn&& fn) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    threads = resolve_threads(threads);
    if (threads <= 1 || count == 1) {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    if (static_cast<std::int64_t>(threads) > count)
        threads = static_cast<unsigned>(count);

    const std::int64_t chunk = std::max<std::int64_t>(
        1, count / (static_cast<std::int64_t>(threads) * 16));
    std::atomic<std::int64_t> cursor{begin};
    auto worker = [&]() {
        for (;;) {
            const std::int64_t lo = cursor.fetch_add(chunk);
            if (lo >= end) return;
            const std::int64_t hi = std::min(lo + chunk, end);
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace combwalk

#endif  // COMBWALK_PARALLEL_HPP
