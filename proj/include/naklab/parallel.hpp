#pragma once

// Bounded worker pool for independent checks. Results land at their index,
// so merged output never depends on completion order.

#include <cstddef>
#include <functional>

namespace naklab {

/// Worker count from NAKLAB_WORKERS, else the hardware concurrency (≥ 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on at most worker_count() threads.
/// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace naklab
