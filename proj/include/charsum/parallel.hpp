#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace charsum {

// Number of workers used by the counting kernels: hardware concurrency,
// capped by the CHARSUM_THREADS environment variable; at least 1.
unsigned worker_count();

// Runs fn(begin, end, worker) over a partition of [0, n) into contiguous
// chunks, one worker per chunk.  Every kernel built on this accumulates
// exact integers into per-worker state merged afterwards in worker order,
// so results do not depend on the partition or the thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t n, Fn&& fn) {
    if (n == 0) return;
    std::uint64_t w = worker_count();
    if (w > n) w = n;
    if (w <= 1) {
        fn(std::uint64_t{0}, n, unsigned{0});
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(w));
    const std::uint64_t chunk = n / w;
    const std::uint64_t rem = n % w;
    std::uint64_t begin = 0;
    for (unsigned i = 0; i < w; ++i) {
        const std::uint64_t end = begin + chunk + (i < rem ? 1 : 0);
        threads.emplace_back([&fn, begin, end, i] { fn(begin, end, i); });
        begin = end;
    }
    for (auto& t : threads) t.join();
}

}  // namespace charsum
