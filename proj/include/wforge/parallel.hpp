// Execution policy for the data-parallel kernels. Every parallel kernel keeps
// a serial reference path; kernels fill per-item buffers in parallel and
// reduce serially, so both paths produce bitwise-identical results.
#pragma once

#include <cstddef>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace wf {

enum class Exec { Serial, Parallel };

template <typename Fn>
void for_each_index(Exec exec, std::ptrdiff_t n, Fn&& fn) {
#if defined(_OPENMP)
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
        return;
    }
#endif
    (void)exec;
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
}

inline bool openmp_enabled() {
#if defined(_OPENMP)
    return true;
#else
    return false;
#endif
}

inline int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace wf
