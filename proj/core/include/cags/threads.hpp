#pragma once

#include <cstddef>
#include <functional>

namespace cags {

// Worker count: CAG_THREADS caps parallelism, 0 or unset means auto.
size_t worker_count();

// Splits [0, n) into contiguous chunks, one worker thread per chunk.
// fn(begin, end) must only write to disjoint per-index state; chunk
// boundaries are deterministic for a given n and worker count.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

}  // namespace cags
