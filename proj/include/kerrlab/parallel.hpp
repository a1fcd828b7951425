#ifndef KERRLAB_PARALLEL_HPP
#define KERRLAB_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace kerrlab {

/// Worker count: KERRLAB_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, n) on up to worker_count() threads. After the first exception no
/// further indices are started, and that exception is rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace kerrlab

#endif  // KERRLAB_PARALLEL_HPP
