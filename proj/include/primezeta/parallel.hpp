#pragma once

#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace primezeta {

// Runs fn(i) for i in [0, count) on up to `threads` workers with a strided
// index split. Callers store results by index, so output is identical to the
// sequential run regardless of thread count. If any worker throws, one of the
// thrown exceptions is rethrown on the calling thread after all workers join.
template <class Fn>
void parallel_for_index(long long count, int threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }
    const int workers = static_cast<int>(
        std::min<long long>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    std::exception_ptr error;
    std::atomic_flag error_claimed;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, &error, &error_claimed, w, workers, count] {
            try {
                for (long long i = w; i < count; i += workers) fn(i);
            } catch (...) {
                if (!error_claimed.test_and_set())
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace primezeta
