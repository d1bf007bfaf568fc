#pragma once

// Minimal deterministic worker pool: a parallel map whose results keep index
// order, so callers merge them without caring how work was scheduled.

#include <atomic>
#include <optional>
#include <exception>
#include <thread>
#include <vector>

namespace sharygin {

/// flag_value > 0 wins; otherwise SHARYGIN_THREADS; otherwise
/// hardware_concurrency (at least 1).
unsigned resolve_thread_count(unsigned flag_value = 0);

template <class T, class Fn>
std::vector<T> parallel_map(size_t count, unsigned threads, Fn fn) {
    std::vector<std::optional<T>> staged(count);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) staged[i].emplace(fn(i));
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr error;
        std::atomic<bool> failed{false};
        auto worker = [&] {
            try {
                for (size_t i = next.fetch_add(1);
                     i < count && !failed.load(std::memory_order_relaxed); i = next.fetch_add(1))
                    staged[i].emplace(fn(i));
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        unsigned n = static_cast<unsigned>(std::min<size_t>(threads, count));
        pool.reserve(n);
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }
    std::vector<T> out;
    out.reserve(count);
    for (std::optional<T>& value : staged) out.push_back(std::move(*value));
    return out;
}

}  // namespace sharygin
