#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace argkit {

/// Runs fn(begin, end) over [0, count) split into contiguous blocks, one per
/// thread. The first exception thrown by any block is rethrown.
template <typename Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1U, threads);
    if (threads == 1 || count < 2 * threads) {
        fn(std::uint64_t{0}, count);
        return;
    }
    const std::uint64_t block = (count + threads - 1) / threads;
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = t * block;
        const std::uint64_t end = std::min(count, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&, t, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace argkit
