#ifndef DELPROD_PARALLEL_HPP
#define DELPROD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace delprod {

/// DELPROD_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(0..n-1) on up to worker_count() threads; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace delprod

#endif
