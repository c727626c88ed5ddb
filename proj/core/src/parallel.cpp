#include "backlimit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace backlimit {

namespace {

std::atomic<std::size_t> g_override{0};
thread_local bool t_in_parallel = false;

std::size_t default_workers() {
    if (const char* env = std::getenv("BACKLIMIT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (...) {
            // fall through to hardware default
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace

std::size_t worker_count() {
    const std::size_t o = g_override.load();
    if (o != 0) return o;
    static const std::size_t def = default_workers();
    return def;
}

void set_worker_count(std::size_t n) { g_override.store(n); }

namespace detail {

void run_indexed(std::size_t n, const std::function<void(std::size_t)>& task) {
    // Nested sections run inline on the calling worker.
    const std::size_t workers = t_in_parallel ? 1 : std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        const bool was = t_in_parallel;
        t_in_parallel = true;
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) task(i);
        t_in_parallel = was;
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
    loop();
}

}  // namespace detail

}  // namespace backlimit
