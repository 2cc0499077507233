#include "distort3/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace distort3 {

int effective_threads() {
#ifdef _OPENMP
  int nt = omp_get_max_threads();
#else
  int nt = 1;
#endif
  if (const char* env = std::getenv("DISTORT3_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < nt) nt = cap;
    } catch (...) {
      // ignore malformed values
    }
  }
  return nt < 1 ? 1 : nt;
}

}  // namespace distort3
