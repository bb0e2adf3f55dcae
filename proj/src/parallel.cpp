#include "hopf/parallel.hpp"

#include <atomic>

namespace hopf {

namespace {
std::atomic<int> g_jobs{0};
}

int parallelJobs() {
    int j = g_jobs.load(std::memory_order_relaxed);
    if (j > 0) return j;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void setParallelJobs(int jobs) { g_jobs.store(jobs, std::memory_order_relaxed); }

} // namespace hopf
