#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace polyfeat {

/// Runs fn(begin, end) over contiguous chunks of [0, n) on up to `jobs`
/// threads. Callers must write only to disjoint, pre-sized storage so the
/// result is identical for any job count.
inline void parallel_for(int jobs, std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (jobs < 1) jobs = 1;
    std::size_t workers = std::min<std::size_t>(jobs, n);
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> threads;
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(fn, begin, end);
    }
    for (auto& t : threads) t.join();
}

}  // namespace polyfeat
