#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace dqc {

// Runs body(i) for i in [0, n) on up to `threads` workers with a static block
// partition. Callers store per-index results and reduce in index order, which
// keeps every reduction bit-identical for any thread count.
template <class Body>
void parallel_for(int n, int threads, Body&& body) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    const int chunk = (n + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const int lo = w * chunk;
        const int hi = std::min(n, lo + chunk);
        workers.emplace_back([lo, hi, w, &errors, &body] {
            try {
                for (int i = lo; i < hi; ++i) body(i);
            } catch (...) {
                errors[std::size_t(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace dqc
