#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace liscount {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Evaluates fn(i) for i in [0, count) into an indexed buffer, splitting the
// range into contiguous blocks. Every entry lands at its own index, so a
// later sequential reduction is independent of the thread count.
template <class T, class Fn>
std::vector<T> parallel_map_indexed(std::size_t count, int threads, Fn&& fn) {
    std::vector<T> buffer(count);
    int t = resolve_threads(threads);
    if (t <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) buffer[i] = fn(i);
        return buffer;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(t), count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            std::size_t lo = count * w / workers;
            std::size_t hi = count * (w + 1) / workers;
            for (std::size_t i = lo; i < hi; ++i) buffer[i] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return buffer;
}

}  // namespace liscount
