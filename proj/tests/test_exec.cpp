/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

// The OpenMP kernels must be bit-identical to the serial reference paths.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtom/separability.hpp"
#include "test_util.hpp"

using namespace qtom;

TEST_CASE("witness scans agree between the serial and parallel paths") {
    for (double p : {0.2, 0.7}) {
        ScanConfig serial;
        serial.g_samples = 40;
        serial.seed = 5;
        serial.policy = ExecPolicy::Serial;
        ScanConfig parallel = serial;
        parallel.policy = ExecPolicy::Parallel;

        WitnessResult a = witness_scan(werner_state(p), serial);
        WitnessResult b = witness_scan(werner_state(p), parallel);
        CHECK(a.f_max == b.f_max);
        CHECK(a.argmax_index == b.argmax_index);
        CHECK(a.argmax_eps == b.argmax_eps);
        CHECK(a.entangled == b.entangled);
        CHECK(max_abs(a.argmax_g - b.argmax_g) == 0.0);
    }
}

TEST_CASE("witness scans are reproducible for a fixed seed") {
    ScanConfig cfg;
    cfg.g_samples = 25;
    cfg.seed = 123;
    WitnessResult a = witness_scan(qutrit_pair(QutritPairKind::ThreeTerm), cfg);
    WitnessResult b = witness_scan(qutrit_pair(QutritPairKind::ThreeTerm), cfg);
    CHECK(a.f_max == b.f_max);
    CHECK(a.argmax_index == b.argmax_index);
}

TEST_CASE("tomogram batches agree between the paths") {
    RandomStream stream(9);
    DensityMatrix rho = random_density({2, 2}, stream);
    std::vector<ComplexMatrix> gs;
    for (int i = 0; i < 64; ++i) gs.push_back(haar_unitary(4, stream));

    auto serial = tomogram_batch(rho.mat(), gs, rho.dims(), ExecPolicy::Serial);
    auto parallel = tomogram_batch(rho.mat(), gs, rho.dims(), ExecPolicy::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK((serial[i].values - parallel[i].values).cwiseAbs().maxCoeff() ==
              0.0);
        CHECK(max_abs(serial[i].group_element - gs[i]) == 0.0);
    }
}

TEST_CASE("positivity sampling agrees between the paths") {
    RandomStream stream(11);
    ComplexMatrix a = random_hermitian(5, stream);
    RandomStream s1(77), s2(77);
    PositivityVerdict serial = positivity_test(a, 50, s1, ExecPolicy::Serial);
    PositivityVerdict parallel = positivity_test(a, 50, s2, ExecPolicy::Parallel);
    CHECK(serial.positive == parallel.positive);
    CHECK(serial.max_moduli_sum == parallel.max_moduli_sum);
    CHECK(serial.trace == parallel.trace);
}
