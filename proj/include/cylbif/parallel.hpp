#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace cylbif {

/// Worker count for sweeps: CYLBIF_THREADS if set to a positive integer,
/// otherwise the hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("CYLBIF_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return static_cast<unsigned>(n);
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(0..n-1) on up to `threads` workers and returns the results in
/// index order. The first exception by index is rethrown after all workers
/// finish, so failures are reported deterministically.
template <class Fn>
auto parallel_map(std::size_t n, Fn&& fn, unsigned threads = thread_count())
    -> std::vector<decltype(fn(std::size_t{}))> {
    using Result = decltype(fn(std::size_t{}));
    std::vector<std::optional<Result>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<Result> results;
    results.reserve(n);
    for (auto& slot : slots) results.push_back(std::move(*slot));
    return results;
}

}  // namespace cylbif
