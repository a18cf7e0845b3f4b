#include "sigsurf/threads.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sigsurf {

int thread_cap() {
  const char* raw = std::getenv("SIGSURF_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    const int cap = std::stoi(raw);
    return cap > 0 ? cap : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

void apply_thread_cap() {
#ifdef _OPENMP
  const int cap = thread_cap();
  if (cap > 0 && cap < omp_get_max_threads()) {
    omp_set_num_threads(cap);
  }
#endif
}

int effective_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace sigsurf
