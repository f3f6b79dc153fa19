#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace lrc {

inline unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Splits [0, count) into one contiguous block per worker and runs
/// fn(worker, begin, end) on each. Results must be reduced by the caller in
/// worker order to stay deterministic.
template <typename Fn>
void parallel_blocks(std::size_t count, unsigned workers, Fn&& fn) {
    workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), std::max<std::size_t>(count, 1)));
    if (workers == 1) {
        fn(0u, std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * chunk);
        const std::size_t end = std::min(count, begin + chunk);
        threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace lrc
