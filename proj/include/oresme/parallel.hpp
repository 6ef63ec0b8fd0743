#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace oresme {

/// Resolves a worker count: 0 means hardware concurrency; the ORESME_WORKERS
/// environment variable caps the result either way.
inline int effective_workers(int requested) {
    int workers = requested;
    if (workers <= 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) {
            workers = 1;
        }
    }
    if (const char* cap = std::getenv("ORESME_WORKERS")) {
        int limit = std::atoi(cap);
        if (limit >= 1 && limit < workers) {
            workers = limit;
        }
    }
    return workers;
}

/// Runs fn(chunk_index, begin, end) over contiguous chunks of [0, count).
/// Chunk boundaries depend only on count and the chunk total, never on
/// scheduling, so chunk-ordered merges are deterministic.
template <typename Fn>
void parallel_chunks(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) {
        return;
    }
    std::size_t nchunks = static_cast<std::size_t>(workers) > count
                              ? count
                              : static_cast<std::size_t>(workers);
    if (nchunks <= 1) {
        fn(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(nchunks);
    std::size_t base = count / nchunks;
    std::size_t extra = count % nchunks;
    std::size_t begin = 0;
    for (std::size_t i = 0; i < nchunks; ++i) {
        std::size_t len = base + (i < extra ? 1 : 0);
        std::size_t end = begin + len;
        threads.emplace_back([&fn, i, begin, end] { fn(i, begin, end); });
        begin = end;
    }
    for (auto& t : threads) {
        t.join();
    }
}

} // namespace oresme
