#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace daglca {

namespace detail {
inline std::atomic<int>& thread_cap_storage() {
    static std::atomic<int> cap{0};  // 0 = unresolved
    return cap;
}
}  // namespace detail

// Caps module-internal parallelism. 0 resets to the default resolution
// order: DAGLCA_THREADS env var, else 1.
inline void set_thread_cap(int threads) {
    detail::thread_cap_storage().store(threads > 0 ? threads : 0);
}

inline int thread_cap() {
    int cap = detail::thread_cap_storage().load();
    if (cap > 0) return cap;
    if (const char* env = std::getenv("DAGLCA_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

// Runs fn(begin, end) over a static partition of [0, total). The partition
// depends only on (total, threads), never on scheduling, so any row-parallel
// kernel built on top produces bit-identical output for every thread count.
template <typename Fn>
void parallel_rows(int total, Fn&& fn) {
    int threads = thread_cap();
    if (threads <= 1 || total < 2 * threads) {
        fn(0, total);
        return;
    }
    if (threads > total) threads = total;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    const int chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const int begin = t * chunk;
        const int end = begin + chunk < total ? begin + chunk : total;
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace daglca
