#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace excolex {

enum class ExecPolicy { Serial, Parallel };

/// Calls body(k) for k in [0, count). Under Parallel the calls run on an
/// OpenMP team; body must only write to per-k state.
template <class Body>
void for_each_index(std::size_t count, ExecPolicy policy, Body&& body)
{
    const auto n = static_cast<long long>(count);
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long k = 0; k < n; ++k)
            body(static_cast<std::size_t>(k));
    } else {
        for (long long k = 0; k < n; ++k)
            body(static_cast<std::size_t>(k));
    }
}

}  // namespace excolex
