#pragma once

#include <exception>
#include <mutex>

namespace twobody {

/// OpenMP loop over [0, n) that carries the first exception out of the
/// parallel region and rethrows it on the calling thread.
template <class F>
void parallel_for(int n, F&& body, bool dynamic = true) {
  std::exception_ptr failure;
  std::mutex guard;
  if (dynamic) {
    #pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    #pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace twobody
