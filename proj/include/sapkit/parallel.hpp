#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sapkit {

// Thread cap: SAPKIT_THREADS env var, else OpenMP default.
inline int max_threads() {
  if (const char* env = std::getenv("SAPKIT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void apply_thread_cap() {
#ifdef _OPENMP
  omp_set_num_threads(max_threads());
#endif
}

}  // namespace sapkit
