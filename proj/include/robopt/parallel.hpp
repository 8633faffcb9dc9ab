#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace robopt {

/// Execution mode for the data-parallel kernels. Every parallel kernel is
/// deterministic: iteration i derives its own RNG substream, so serial and
/// parallel execution produce bit-identical results. The serial path is kept
/// as a reference implementation for testing and benchmarking.
enum class Exec { serial, parallel };

namespace detail {

template <class F>
inline void run_loop_serial(std::size_t n, F&& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace detail

template <class F>
inline void parallel_for(std::size_t n, F&& body, Exec exec = Exec::parallel) {
  if (exec == Exec::serial) {
    detail::run_loop_serial(n, body);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    body(static_cast<std::size_t>(i));
  }
#else
  detail::run_loop_serial(n, body);
#endif
}

}  // namespace robopt
