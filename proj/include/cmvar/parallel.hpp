#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmvar {

/// Execution mode for the embarrassingly parallel sweeps (point trials,
/// S-pair reductions, residual scans). Results are index-addressed, so both
/// modes produce identical output; the serial path is the reference the
/// tests compare against.
enum class Exec { serial, openmp };

inline int thread_count(Exec exec) {
#ifdef _OPENMP
    return exec == Exec::openmp ? omp_get_max_threads() : 1;
#else
    (void)exec;
    return 1;
#endif
}

template <class F>
void parallel_for(Exec exec, std::size_t n, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

} // namespace cmvar
