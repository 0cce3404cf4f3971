#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace bibd {

/// 0 means "all cores".
inline int resolve_threads(int requested)
{
    if (requested > 0) {
        return requested;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Runs f(i) for i in [0, n) on up to `threads` workers. Work is handed out
/// dynamically; callers write results by index so output order never depends
/// on scheduling.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f)
{
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                f(i);
            }
        });
    }
}

} // namespace bibd
