#ifndef BOSEGAS_EXEC_HPP
#define BOSEGAS_EXEC_HPP

namespace bosegas {

// Execution policy for the data-parallel kernels. Every parallel kernel has
// a plain-loop serial twin used as reference in tests and benchmarks.
// Parallel reductions combine per-thread partials in thread order, so results
// are reproducible for a fixed thread count.
enum class Exec { serial, parallel };

}  // namespace bosegas

#endif
