#include "qwalk/parallel.hpp"

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qwalk {

namespace {
int default_threads() {
#if defined(_OPENMP)
    return omp_get_num_procs();
#else
    return 1;
#endif
}
}  // namespace

void set_thread_count(int threads) {
#if defined(_OPENMP)
    omp_set_num_threads(threads > 0 ? threads : default_threads());
#else
    (void)threads;
#endif
}

int thread_count() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int configure_threads_from_env() {
    int requested = 0;
    if (const char* env = std::getenv("QWALK_THREADS"); env != nullptr && *env != '\0') {
        try {
            requested = std::stoi(env);
        } catch (const std::exception&) {
            requested = 0;
        }
    }
    set_thread_count(requested < 0 ? 0 : requested);
    return thread_count();
}

}  // namespace qwalk
