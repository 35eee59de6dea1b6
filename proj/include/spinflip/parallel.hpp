#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace spinflip {

/// Worker count from SPINFLIP_WORKERS, falling back to hardware concurrency.
int default_worker_count();

/// Runs body(i) for i in [0,n) on up to `workers` threads.
/// Tasks are independent; each writes only its own output slot, so results
/// do not depend on the scheduling order.
template <typename Body>
void parallel_for(std::size_t n, int workers, Body&& body) {
    if (workers < 1) workers = 1;
    if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace spinflip
