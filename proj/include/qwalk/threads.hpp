#pragma once

namespace qwalk {

// --threads flag wins, then QWALK_THREADS, then all logical cores.
// Applies the choice via omp_set_num_threads and returns the effective count.
int resolve_threads(int cli_threads);

int current_max_threads();

}  // namespace qwalk
