#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sturan {

// Runs fn(i) for every i in [0, count) across up to `jobs` worker threads
// (jobs <= 0 means hardware concurrency). Callers write results into
// per-index slots, so merged output never depends on the schedule. The first
// exception thrown by any worker is rethrown after all workers finish.
template <class Fn>
void parallel_for(long long count, int jobs, Fn&& fn) {
    if (count <= 0) return;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    if (static_cast<long long>(jobs) > count) jobs = static_cast<int>(count);

    if (jobs == 1) {
        for (long long i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<long long> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const long long i = next.fetch_add(1);
            if (i >= count || stop.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                stop.store(true);
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace sturan
