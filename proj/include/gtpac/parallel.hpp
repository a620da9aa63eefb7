#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace gtpac {

/// Worker count resolution: explicit request > GTPAC_THREADS > hardware.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GTPAC_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Static partition of [begin, end) over `threads` workers. Each index is
/// processed exactly once; callers own any result slots, so output is
/// independent of the worker count.
template <typename Fn>
void parallel_for(long long begin, long long end, int threads, Fn&& fn) {
    const long long count = end - begin;
    if (count <= 0) return;
    threads = resolve_threads(threads);
    if (threads <= 1 || count == 1) {
        for (long long i = begin; i < end; ++i) fn(i);
        return;
    }
    const long long workers = std::min<long long>(threads, count);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (long long w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            const long long lo = begin + count * w / workers;
            const long long hi = begin + count * (w + 1) / workers;
            for (long long i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace gtpac
