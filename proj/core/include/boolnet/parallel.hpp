#pragma once

#include <cstddef>
#include <functional>

namespace boolnet {

// Worker count: hardware concurrency, capped by the BOOLNET_THREADS
// environment variable when it is set to a positive integer.
std::size_t worker_count();

// Runs body(begin, end) over a static contiguous partition of [0, n).
// Each index is visited by exactly one worker, so kernels that only write
// to per-index outputs give results identical to a sequential run.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t min_chunk = 16);

}  // namespace boolnet
