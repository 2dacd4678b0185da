#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigma {

inline bool parallel_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

// Worker threads the parallel kernels can actually use (1 without OpenMP).
inline int parallel_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs f(i) for i in [0, count). Iterations must be independent; callers
// keep determinism by writing results into index-addressed slots. Below
// `grain` iterations the loop stays serial.
template <typename F>
void parallel_for(std::size_t count, F&& f, std::size_t grain = 256) {
#ifdef _OPENMP
  if (count >= grain && omp_get_max_threads() > 1 && !omp_in_parallel()) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(sigma_parallel_for_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)grain;
#endif
  for (std::size_t i = 0; i < count; ++i) f(i);
}

}  // namespace sigma
