#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rgd::cli {

// Calls f(i) for i in [0, n) on up to `threads` workers. Results must be written
// by index so the output order never depends on scheduling. The exception of the
// lowest failing index is rethrown after all workers finish.
template <class F>
void parallelFor(std::size_t n, int threads, F&& f) {
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t k = std::min<std::size_t>(threads > 1 ? threads : 1, n);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < k; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace rgd::cli
