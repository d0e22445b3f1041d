#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace netload {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Dynamic chunked loop over [begin, end). Workers must not share mutable
// state; callers get scheduling-independent results by writing to disjoint
// slots and reducing in index order afterwards.
inline void parallel_for(int begin, int end, int threads, const std::function<void(int)>& fn) {
    const int nthreads = resolve_threads(threads);
    if (nthreads <= 1 || end - begin <= 1) {
        for (int k = begin; k < end; ++k) fn(k);
        return;
    }
    constexpr int kChunk = 16;
    std::atomic<int> next{begin};
    auto worker = [&] {
        for (;;) {
            const int lo = next.fetch_add(kChunk);
            if (lo >= end) return;
            const int hi = std::min(lo + kChunk, end);
            for (int k = lo; k < hi; ++k) fn(k);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace netload
