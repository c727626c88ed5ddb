#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <vector>

namespace backlimit {

/// Worker count for parallel sections: set_worker_count() if called,
/// else BACKLIMIT_THREADS, else the hardware concurrency. Never changes
/// any result, only how it is scheduled.
std::size_t worker_count();
/// 0 restores the environment/hardware default.
void set_worker_count(std::size_t n);

namespace detail {
void run_indexed(std::size_t n, const std::function<void(std::size_t)>& task);
}

/// Evaluates fn(0..n-1) across workers and returns results in index order.
/// If any task throws, the exception of the lowest failing index is
/// rethrown, so failures are schedule-independent too.
template <typename Fn>
auto parallel_map(std::size_t n, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    detail::run_indexed(n, [&](std::size_t i) {
        try {
            slots[i].emplace(fn(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

}  // namespace backlimit
