#ifndef PATCHGLUE_PARALLEL_HPP
#define PATCHGLUE_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace patchglue {

/// Worker count: min(hardware concurrency, PATCHGLUE_THREADS if set).
/// PATCHGLUE_THREADS=1 forces serial execution.
std::size_t worker_count();

/// Run fn(i) for i in [0, n). Work is split into contiguous chunks, one per
/// worker; results must be written to preallocated slots so that the outcome
/// is independent of scheduling. The first exception thrown by any worker is
/// rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace patchglue

#endif  // PATCHGLUE_PARALLEL_HPP
