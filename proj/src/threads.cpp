#include "liecoh/threads.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liecoh {

static std::atomic<int> g_override{0};

void set_thread_override(int n) { g_override.store(n < 0 ? 0 : n); }

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  int ov = g_override.load();
  if (ov > 0) return ov;
  if (const char* env = std::getenv("LIECOH_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace liecoh
