#include "cags/threads.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cags {

size_t worker_count() {
    size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("CAG_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) n = std::min(n, static_cast<size_t>(cap));
    }
    return n;
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
    if (n == 0) return;
    size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        fn(0, n);
        return;
    }
    size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        size_t begin = w * chunk;
        size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cags
