#pragma once

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace borsuk {

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Sets the OpenMP thread count for the lifetime of the scope.
class ThreadScope {
 public:
  explicit ThreadScope(int threads) : previous_(max_threads()) {
#if defined(_OPENMP)
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
  }
  ~ThreadScope() {
#if defined(_OPENMP)
    omp_set_num_threads(previous_);
#endif
  }
  ThreadScope(const ThreadScope&) = delete;
  ThreadScope& operator=(const ThreadScope&) = delete;

 private:
  int previous_;
};

}  // namespace borsuk
