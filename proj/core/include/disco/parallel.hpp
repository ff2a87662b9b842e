#pragma once

#include <cstddef>
#include <functional>

namespace disco {

/// Worker count for parallel loops: DISCO_THREADS if set (clamped to >= 1),
/// otherwise the hardware concurrency.
std::size_t thread_count();

/// Runs fn(i) for i in [0, count) across worker threads with static
/// chunking. Each index is processed exactly once and writes only its own
/// output slot, so results are identical for any thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace disco
