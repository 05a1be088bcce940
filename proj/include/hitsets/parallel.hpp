#pragma once

#include <cstddef>
#include <exception>
#include <utility>

namespace hitsets {

/// Execution policy for the data-parallel kernels. Every kernel that accepts
/// an ExecMode produces identical results in both modes; the serial mode is
/// the reference implementation the tests compare against.
enum class ExecMode { serial, parallel };

/// Runs fn(0..count-1). In parallel mode iterations run concurrently, so fn
/// must only write to per-index slots. The first exception thrown by any
/// iteration is rethrown after the loop completes.
template <class Fn>
void for_each_index(std::size_t count, ExecMode mode, Fn&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::parallel) {
    std::exception_ptr first_error;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        {
          if (!first_error) first_error = std::current_exception();
        }
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace hitsets
