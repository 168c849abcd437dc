#include "divland/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace divland {

int configured_threads() {
    if (const char* env = std::getenv("DIVLAND_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void apply_thread_env() {
#ifdef _OPENMP
    omp_set_num_threads(configured_threads());
#endif
}

} // namespace divland
