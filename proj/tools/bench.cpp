/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Compares the serial reference kernels against the OpenMP path on the two
// scan-shaped workloads: the witness scan and a tomogram batch.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qtom/separability.hpp"

namespace {

double time_seconds(const std::function<void()>& fn, int repeats) {
    fn();  // warm up
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < repeats; ++r) fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count() / repeats;
}

void report(const std::string& name, double serial, double parallel) {
    std::printf("%-28s serial %9.4f s   parallel %9.4f s   speedup %.2fx\n",
                name.c_str(), serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    using namespace qtom;

    {
        DensityMatrix rho = qutrit_pair(QutritPairKind::ThreeTerm);
        ScanConfig cfg;
        cfg.eps_points = 41;
        cfg.g_samples = 200;
        auto run = [&](ExecPolicy policy) {
            cfg.policy = policy;
            witness_scan(rho, cfg);
        };
        double serial = time_seconds([&] { run(ExecPolicy::Serial); }, repeats);
        double parallel = time_seconds([&] { run(ExecPolicy::Parallel); }, repeats);
        report("witness scan (9x9, 200 g)", serial, parallel);
    }

    {
        RandomStream stream(7);
        DensityMatrix rho = random_density({4, 4}, stream);
        std::vector<ComplexMatrix> gs;
        for (int i = 0; i < 4000; ++i) gs.push_back(haar_unitary(16, stream));
        auto run = [&](ExecPolicy policy) {
            tomogram_batch(rho.mat(), gs, rho.dims(), policy);
        };
        double serial = time_seconds([&] { run(ExecPolicy::Serial); }, repeats);
        double parallel = time_seconds([&] { run(ExecPolicy::Parallel); }, repeats);
        report("tomogram batch (16x16, 4k g)", serial, parallel);
    }

    {
        RandomStream stream(11);
        ComplexMatrix a = random_hermitian(27, stream);
        auto run = [&](ExecPolicy policy) {
            RandomStream local(3);
            positivity_test(a, 2000, local, policy);
        };
        double serial = time_seconds([&] { run(ExecPolicy::Serial); }, repeats);
        double parallel = time_seconds([&] { run(ExecPolicy::Parallel); }, repeats);
        report("positivity test (27x27, 2k U)", serial, parallel);
    }

    return 0;
}
