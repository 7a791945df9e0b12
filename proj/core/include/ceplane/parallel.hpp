#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ceplane {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) {
        return requested;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count). Each index must write only its own output
/// slot; scheduling order is unspecified but results are then independent of
/// the thread count. The first exception thrown by any worker is rethrown.
template <typename F>
void parallel_for(std::size_t count, unsigned threads, F&& fn) {
    threads = resolve_threads(threads);
    if (count == 0) {
        return;
    }
    if (threads <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) {
                break;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                failed.store(true, std::memory_order_relaxed);
            }
        }
    };

    std::vector<std::thread> pool;
    std::size_t n_workers = std::min<std::size_t>(threads, count);
    pool.reserve(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace ceplane
