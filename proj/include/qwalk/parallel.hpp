#pragma once

#include <cstddef>
#include <cstdint>

namespace qwalk {

/// Worker count used by the engines; 0 restores the runtime default.
void set_thread_count(int threads);
int thread_count();

/// Applies QWALK_THREADS (0 or unset = auto). Returns the resulting count.
int configure_threads_from_env();

/// Runs body(i) for i in [0, n). Iterations must write disjoint memory.
template <typename Body>
void parallel_for(std::int64_t n, Body&& body) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        body(i);
    }
#else
    for (std::int64_t i = 0; i < n; ++i) {
        body(i);
    }
#endif
}

}  // namespace qwalk
