// campaign-forensics: deterministic fork-join parallel_for.
// SPDX-License-Identifier: MIT
#include "cfx/util/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace cfx {
namespace {

std::atomic<unsigned> g_thread_cap{0};

}  // namespace

void set_thread_cap(unsigned cap) { g_thread_cap.store(cap, std::memory_order_relaxed); }

unsigned thread_cap() {
    const unsigned cap = g_thread_cap.load(std::memory_order_relaxed);
    if (cap != 0) return cap;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body) {
    if (begin >= end) return;
    const std::size_t count = end - begin;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(thread_cap(), count));
    if (workers <= 1) {
        for (std::size_t i = begin; i < end; ++i) body(i);
        return;
    }
    // Static contiguous chunks; each index's work is identical regardless of
    // which thread runs it, so per-index output slots make results
    // independent of both scheduling and worker count.
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr first_error;
    std::size_t first_error_index = end;
    std::mutex error_mutex;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = begin + static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (i < first_error_index) {
                        first_error_index = i;
                        first_error = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cfx
