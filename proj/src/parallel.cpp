#include "rgg/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace rgg {

int worker_count() {
    const char* env = std::getenv("RGG_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    if (n <= 1) return 1;
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return std::min(n, std::max(1, hw));
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    const int workers = worker_count();
    if (workers <= 1 || n < 2) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const size_t lo = w * chunk;
        const size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &fn] {
            for (size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& t : threads) t.join();
}

}  // namespace rgg
