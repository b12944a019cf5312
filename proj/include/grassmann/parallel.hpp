#pragma once

#include <thread>
#include <vector>

namespace grassmann {

/// Runs fn(chunk_index, begin, end) over a static split of [0, n) into
/// n_workers contiguous chunks. Chunks are disjoint, so results collected
/// per chunk and merged in chunk order are identical for any worker count.
template <typename Fn>
void parallel_chunks(size_t n, int n_workers, Fn&& fn) {
    if (n_workers < 1) n_workers = 1;
    const size_t workers = std::min<size_t>(static_cast<size_t>(n_workers), n ? n : 1);
    if (workers <= 1) {
        fn(size_t{0}, size_t{0}, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const size_t per = n / workers;
    const size_t extra = n % workers;
    size_t begin = 0;
    for (size_t c = 0; c < workers; ++c) {
        const size_t len = per + (c < extra ? 1 : 0);
        threads.emplace_back([&fn, c, begin, len] { fn(c, begin, begin + len); });
        begin += len;
    }
    for (auto& t : threads) t.join();
}

}  // namespace grassmann
