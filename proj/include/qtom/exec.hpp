/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_EXEC_HPP
#define QTOM_EXEC_HPP

#include <cstddef>

#include "qtom/types.hpp"

namespace qtom {

/// Runs fn(i) for i in [0, count). Iterations must be independent and write
/// only to their own slots, so the parallel path is bit-identical to the
/// serial reference regardless of scheduling.
template <typename Fn>
void indexed_for(std::size_t count, ExecPolicy policy, Fn&& fn) {
#ifdef _OPENMP
    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)policy;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace qtom

#endif
