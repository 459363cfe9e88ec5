#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace polarsw {

/// Worker count: POLARSW_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Number of chunks parallel_chunks(n, ...) will use; size per-chunk
/// accumulators with it.
std::size_t chunk_count(std::size_t n);

/// Splits [0, n) into chunk_count(n) contiguous ranges and runs
/// fn(begin, end, chunk) on each, one thread per chunk.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

}  // namespace polarsw
