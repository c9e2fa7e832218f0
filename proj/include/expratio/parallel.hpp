#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace expratio::detail {

// Runs fn(i) for i in [0, count). Work is handed out in fixed-size blocks,
// so as long as fn(i) writes only to slot i of a preallocated buffer the
// result is identical for any thread count, including one.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    constexpr std::size_t block = 32;
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers =
        std::min<std::size_t>(hw ? hw : 1, (count + block - 1) / block);

    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
        try {
            for (;;) {
                const std::size_t lo = next.fetch_add(block);
                if (lo >= count) return;
                const std::size_t hi = std::min(count, lo + block);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace expratio::detail
