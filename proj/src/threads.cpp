#include "qwalk/threads.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace qwalk {

int resolve_threads(int cli_threads) {
  int n = cli_threads;
  if (n <= 0) {
    if (const char* env = std::getenv("QWALK_THREADS")) {
      try {
        n = std::stoi(env);
      } catch (...) {
        n = 0;
      }
    }
  }
  if (n <= 0) n = omp_get_max_threads();
  omp_set_num_threads(n);
  return n;
}

int current_max_threads() { return omp_get_max_threads(); }

}  // namespace qwalk
