#include "edcp/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace edcp {

int resolve_threads(int threads) {
    if (threads > 0) {
        return threads;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t count, const std::function<void(std::int64_t)>& fn,
                  int threads) {
    if (count <= 0) {
        return;
    }
    int workers = std::min<std::int64_t>(resolve_threads(threads), count);
    if (workers == 1) {
        for (std::int64_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto body = [&](std::int64_t first) {
        try {
            for (std::int64_t i = first; i < count; i += workers) {
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int t = 1; t < workers; ++t) {
        pool.emplace_back(body, t);
    }
    body(0);
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace edcp
