#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coflab {

// Fan-out policy for data-parallel loops (group-element sums, (l,k) term
// batches, disc quadrature slices). Serial is the reference path; Parallel
// fills the same per-index partials with OpenMP and reduces them in the
// identical fixed order, so both paths produce bit-identical results.
enum class ExecPolicy { Serial, Parallel };

// Thread cap: COFLAB_THREADS, else the OpenMP default.
inline int maxThreads() {
#ifdef _OPENMP
    static const int cap = [] {
        if (const char* env = std::getenv("COFLAB_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return omp_get_max_threads();
    }();
    return cap;
#else
    return 1;
#endif
}

} // namespace coflab
