#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxeter {

/// Kernels take an execution policy; `Serial` is the reference path the
/// parallel one is tested against.
enum class Execution { Serial, Parallel };

/// Runs fn(i) for i in [0, n). The first exception thrown by any iteration
/// is rethrown on the calling thread after the loop.
template <class Fn>
void parallel_for(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace coxeter
