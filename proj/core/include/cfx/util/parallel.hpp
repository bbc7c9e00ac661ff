// campaign-forensics: deterministic fork-join parallelism.
// SPDX-License-Identifier: MIT
//
// Stages parallelize over independent units (realizations, targets,
// resolutions) whose results land in pre-sized slots indexed by unit — never
// by completion order — so thread count cannot change any output.
#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace cfx {

/// Global worker cap used by parallel_for (0 = hardware concurrency).
/// Set once at startup from --threads; not thread-safe to change mid-run.
void set_thread_cap(unsigned cap);
unsigned thread_cap();

/// Run body(i) for i in [begin, end) on up to thread_cap() threads.
/// Work is dealt in contiguous static chunks; exceptions propagate (first
/// thrown by lowest index wins).  body must only write to per-index state.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body);

}  // namespace cfx
