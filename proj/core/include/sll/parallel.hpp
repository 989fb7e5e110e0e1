#ifndef SLL_PARALLEL_HPP
#define SLL_PARALLEL_HPP

#include <functional>

namespace sll {

/// Number of workers used by parallel loops. Resolution order:
/// set_worker_count() value if positive, else hardware concurrency, with the
/// SLL_THREADS environment variable acting as an upper cap on either.
int worker_count();

/// Override the worker count (0 restores the default). SLL_THREADS still caps.
void set_worker_count(int n);

/// Runs fn(i) for i in [0, n) on a static partition of the index range.
/// Every index is computed independently of the partition, so results are
/// identical for any worker count.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace sll

#endif  // SLL_PARALLEL_HPP
