#pragma once

#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace hopf {

// Verification fan-out; 0 means "all available cores". Set once by the CLI
// before any checks run, read concurrently afterwards.
int parallelJobs();
void setParallelJobs(int jobs);

// Splits [0, n) into contiguous chunks over worker threads. Callers keep
// per-index state so merged results stay in basis order.
inline void parallelFor(int n, const std::function<void(int)>& fn) {
    int jobs = parallelJobs();
    if (jobs <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    jobs = std::min(jobs, n);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    std::exception_ptr error;
    std::mutex errMutex;
    for (int w = 0; w < jobs; ++w) {
        int lo = static_cast<int>(static_cast<long>(n) * w / jobs);
        int hi = static_cast<int>(static_cast<long>(n) * (w + 1) / jobs);
        workers.emplace_back([&, lo, hi] {
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(errMutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace hopf
