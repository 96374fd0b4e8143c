#pragma once

// OpenMP-backed parallel_for with a runtime switch so the sampling kernels can
// be run against their serial reference in tests and benchmarks.

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qhk {

bool parallel_enabled();
void set_parallel_enabled(bool on);

template <typename F>
void parallel_for(std::ptrdiff_t n, F&& f) {
#ifdef _OPENMP
  if (parallel_enabled()) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
    return;
  }
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

}  // namespace qhk
