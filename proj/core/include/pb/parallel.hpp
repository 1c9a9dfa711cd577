#pragma once

#include <cstddef>
#include <functional>

namespace pb {

/// Number of workers to use: jobs if > 0, else $PB_JOBS, else hardware
/// concurrency.
unsigned resolve_jobs(unsigned jobs);

/// Runs body(i) for i in [0, n) on a bounded worker pool. Workers pull
/// indices from a shared counter; callers that need deterministic output
/// write results into preallocated slots indexed by i and merge in order.
/// The first exception thrown by any worker is rethrown after join.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace pb
