#ifndef SURFPOLY_PARALLEL_HPP
#define SURFPOLY_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace surfpoly {

/// Runs fn(i) for i in [0, n) on up to `workers` threads. Work is split into
/// contiguous index blocks, so any output written to slot i is independent of
/// the worker count and of scheduling. The first exception, if any, is
/// rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t thread_count = std::min<std::size_t>(workers, n);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(thread_count);
    const std::size_t chunk = (n + thread_count - 1) / thread_count;
    for (std::size_t t = 0; t < thread_count; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        threads.emplace_back([&, t, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace surfpoly

#endif
