/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/examples.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "qtom/io.hpp"

namespace qtom {

namespace {

ExampleResult werner_boundary(std::uint64_t seed) {
    ExampleResult result{"werner-boundary", true, "", {}};
    std::ostringstream detail;
    ScanConfig cfg;
    cfg.seed = seed;
    cfg.g_samples = 20;
    const double separable[] = {0.0, 0.1, 0.2, 1.0 / 3.0};
    const double entangled[] = {0.4, 0.7, 1.0};
    for (double p : separable) {
        WitnessResult w = witness_scan(werner_state(p), cfg);
        if (std::abs(w.f_max - 1.0) > 1e-9 || w.entangled) {
            result.pass = false;
            detail << "p=" << p << " gave f_max=" << w.f_max << "; ";
        }
    }
    for (double p : entangled) {
        WitnessResult w = witness_scan(werner_state(p), cfg);
        // closed form: max over the probe family is (1 + 3p)/2
        double expected = (1.0 + 3.0 * p) / 2.0;
        if (!w.entangled || w.f_max <= 1.01 ||
            std::abs(w.f_max - expected) > 1e-9) {
            result.pass = false;
            detail << "p=" << p << " gave f_max=" << w.f_max << "; ";
        }
    }
    if (result.pass) detail << "separable iff p <= 1/3 on all 7 points";
    result.detail = detail.str();
    return result;
}

ExampleResult werner_closed_form() {
    ExampleResult result{"werner-closed-form", true, "", {}};
    const ComplexMatrix g0 = werner_g0();
    double worst = 0.0;
    for (int pi = 0; pi <= 20; ++pi) {
        double p = -1.0 / 3.0 + (1.0 + 1.0 / 3.0) * pi / 20.0;
        DensityMatrix rho = werner_state(p);
        for (int ei = 0; ei <= 20; ++ei) {
            double eps = -1.0 + 2.0 * ei / 20.0;
            auto ensemble = single_subsystem_ensemble(rho.dims(), 2,
                                                      depolarizing(2, eps));
            double f = witness_F(rho, ensemble, g0);
            double formula = 3.0 * std::abs((1.0 + eps * p) / 4.0) +
                             std::abs((1.0 - 3.0 * p * eps) / 4.0);
            worst = std::max(worst, std::abs(f - formula));
        }
    }
    DensityMatrix top = werner_state(1.0);
    double f_top = witness_F(
        top, single_subsystem_ensemble(top.dims(), 2, depolarizing(2, 1.0)), g0);
    result.pass = worst <= 1e-12 && std::abs(f_top - 2.0) <= 1e-12;
    std::ostringstream detail;
    detail << "max |F - closed form| = " << worst << ", F(p=1, eps=1) = "
           << f_top;
    result.detail = detail.str();
    return result;
}

ExampleResult qutrit_check(QutritPairKind kind) {
    const bool three = kind == QutritPairKind::ThreeTerm;
    ExampleResult result{three ? "qutrit3" : "qutrit2", true, "", {}};
    DensityMatrix rho = qutrit_pair(kind);
    double worst = 0.0;
    double f_best = 0.0, eps_best = 0.0;
    for (double eps : depolarizing_grid(3, 41)) {
        auto ensemble =
            single_subsystem_ensemble(rho.dims(), 2, depolarizing(3, eps));
        Superoperator l = ensemble_superop(ensemble, rho.dims());
        ComplexMatrix rho_l = l.apply(rho.mat());
        double f = witness_F_transformed(rho_l, rho.dims(),
                                         eig_hermitian(rho_l).vectors);
        double formula =
            three ? 8.0 * std::abs((1.0 + eps) / 9.0) +
                        std::abs((1.0 - 8.0 * eps) / 9.0)
                  : 5.0 * std::abs(1.0 + eps) / 6.0 +
                        std::abs(1.0 - 5.0 * eps) / 6.0;
        worst = std::max(worst, std::abs(f - formula));
        result.curve.emplace_back(eps, f);
        if (f > f_best) {
            f_best = f;
            eps_best = eps;
        }
    }
    const double peak = three ? 5.0 / 3.0 : 3.0 / 2.0;
    result.pass = worst <= 1e-12 && std::abs(f_best - peak) <= 1e-12 &&
                  std::abs(eps_best - 0.5) <= 1e-12;
    std::ostringstream detail;
    detail << "max |F - closed form| = " << worst << ", peak F = " << f_best
           << " at eps = " << eps_best;
    result.detail = detail.str();
    return result;
}

ExampleResult octahedron() {
    ExampleResult result{"octahedron", true, "", {}};
    int states = 0, mismatches = 0;
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= 8; ++b) {
            for (int c = 0; c <= 8; ++c) {
                double mu1 = -1.0 + a / 4.0;
                double mu2 = -1.0 + b / 4.0;
                double mu3 = -1.0 + c / 4.0;
                std::optional<DensityMatrix> rho;
                try {
                    rho = generalized_werner(mu1, mu2, mu3);
                } catch (const std::invalid_argument&) {
                    continue;  // outside the state tetrahedron
                }
                ++states;
                bool inside =
                    std::abs(mu1) + std::abs(mu2) + std::abs(mu3) <= 1.0 + 1e-12;
                if (peres_test(*rho).is_ppt != inside) ++mismatches;
            }
        }
    }
    result.pass = mismatches == 0 && states > 0;
    std::ostringstream detail;
    detail << states << " grid states, " << mismatches
           << " PPT/octahedron mismatches";
    result.detail = detail.str();
    return result;
}

}  // namespace

std::vector<std::string> example_names() {
    return {"werner-boundary", "werner-closed-form", "qutrit3", "qutrit2",
            "octahedron"};
}

std::vector<ExampleResult> run_example_suite(const std::string& filter,
                                             std::uint64_t seed) {
    std::vector<ExampleResult> results;
    auto want = [&](const std::string& name) {
        return filter.empty() || filter == name;
    };
    if (want("werner-boundary")) results.push_back(werner_boundary(seed));
    if (want("werner-closed-form")) results.push_back(werner_closed_form());
    if (want("qutrit3")) results.push_back(qutrit_check(QutritPairKind::ThreeTerm));
    if (want("qutrit2")) results.push_back(qutrit_check(QutritPairKind::TwoTerm));
    if (want("octahedron")) results.push_back(octahedron());
    return results;
}

std::vector<std::filesystem::path> write_example_states(
    const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> written;
    auto save = [&](const std::string& name, const DensityMatrix& rho) {
        std::filesystem::path path = dir / name;
        io::save_state_file(path, rho.mat(), rho.dims());
        written.push_back(path);
    };
    save("werner_p0.0.json", werner_state(0.0));
    save("werner_p0.2.json", werner_state(0.2));
    save("werner_p0.5.json", werner_state(0.5));
    save("werner_p1.0.json", werner_state(1.0));
    save("qutrit_three_term.json", qutrit_pair(QutritPairKind::ThreeTerm));
    save("qutrit_two_term.json", qutrit_pair(QutritPairKind::TwoTerm));
    return written;
}

}  // namespace qtom
