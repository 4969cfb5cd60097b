/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
// exit code is the number of failures. Every tolerance is pinned here.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qtom/channels.hpp"
#include "qtom/separability.hpp"
#include "qtom/tomography.hpp"

using namespace qtom;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%s] %2d %-24s %s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str());
    if (!pass) ++failures;
}

ComplexMatrix random_gaussian(Index n, RandomStream& stream) {
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m(i, j) = Complex(stream.gaussian(), stream.gaussian());
    return m;
}

// 1. Werner boundary under the witness scan.
void criterion_werner_boundary() {
    ScanConfig cfg;
    cfg.g_samples = 100;
    cfg.seed = 2;
    bool pass = true;
    double worst_sep = 0.0, worst_ent = 10.0;
    for (double p : {0.0, 0.1, 0.2, 1.0 / 3.0}) {
        WitnessResult w = witness_scan(werner_state(p), cfg);
        worst_sep = std::max(worst_sep, std::abs(w.f_max - 1.0));
        pass = pass && std::abs(w.f_max - 1.0) <= 1e-9 && !w.entangled;
    }
    for (double p : {0.4, 0.7, 1.0}) {
        WitnessResult w = witness_scan(werner_state(p), cfg);
        worst_ent = std::min(worst_ent, w.f_max);
        pass = pass && w.f_max > 1.01 && w.entangled;
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "max |f-1| = %.2e separable side, min f = %.4f entangled side",
                  worst_sep, worst_ent);
    report(1, "werner-boundary", pass, detail);
}

// 2. Closed-form F against the named group element on a 21x21 grid.
void criterion_closed_form() {
    const ComplexMatrix g0 = werner_g0();
    double worst = 0.0;
    for (int pi = 0; pi <= 20; ++pi) {
        double p = -1.0 / 3.0 + (4.0 / 3.0) * pi / 20.0;
        DensityMatrix rho = werner_state(p);
        for (int ei = 0; ei <= 20; ++ei) {
            double eps = -1.0 + 2.0 * ei / 20.0;
            double f = witness_F(
                rho, single_subsystem_ensemble(rho.dims(), 2, depolarizing(2, eps)),
                g0);
            double formula = 3.0 * std::abs((1.0 + eps * p) / 4.0) +
                             std::abs((1.0 - 3.0 * p * eps) / 4.0);
            worst = std::max(worst, std::abs(f - formula));
        }
    }
    DensityMatrix top = werner_state(1.0);
    double f_top = witness_F(
        top, single_subsystem_ensemble(top.dims(), 2, depolarizing(2, 1.0)), g0);
    bool pass = worst <= 1e-12 && std::abs(f_top - 2.0) <= 1e-12;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "max grid deviation %.2e, F(p=1,eps=1) = %.15f", worst, f_top);
    report(2, "werner-closed-form", pass, detail);
}

// 3. Two-qutrit closed forms with maxima 5/3 and 3/2 at eps = 1/2.
void criterion_qutrits() {
    double worst = 0.0;
    double peaks[2] = {0.0, 0.0};
    double peak_eps[2] = {0.0, 0.0};
    const QutritPairKind kinds[2] = {QutritPairKind::ThreeTerm,
                                     QutritPairKind::TwoTerm};
    for (int k = 0; k < 2; ++k) {
        DensityMatrix rho = qutrit_pair(kinds[k]);
        for (double eps : depolarizing_grid(3, 41)) {
            auto ensemble =
                single_subsystem_ensemble(rho.dims(), 2, depolarizing(3, eps));
            Superoperator l = ensemble_superop(ensemble, rho.dims());
            ComplexMatrix rho_l = l.apply(rho.mat());
            double f = witness_F_transformed(rho_l, rho.dims(),
                                             eig_hermitian(rho_l).vectors);
            double formula =
                k == 0 ? 8.0 * std::abs((1.0 + eps) / 9.0) +
                             std::abs((1.0 - 8.0 * eps) / 9.0)
                       : 5.0 * std::abs(1.0 + eps) / 6.0 +
                             std::abs(1.0 - 5.0 * eps) / 6.0;
            worst = std::max(worst, std::abs(f - formula));
            if (f > peaks[k]) {
                peaks[k] = f;
                peak_eps[k] = eps;
            }
        }
    }
    bool pass = worst <= 1e-12 && std::abs(peaks[0] - 5.0 / 3.0) <= 1e-12 &&
                std::abs(peaks[1] - 1.5) <= 1e-12 &&
                std::abs(peak_eps[0] - 0.5) <= 1e-12 &&
                std::abs(peak_eps[1] - 0.5) <= 1e-12 && peaks[0] > peaks[1];
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "peaks %.12f @ eps=%.3f and %.12f @ eps=%.3f, grid dev %.2e",
                  peaks[0], peak_eps[0], peaks[1], peak_eps[1], worst);
    report(3, "qutrit-values", pass, detail);
}

// 4. Peres verdicts on a 0.02-spaced grid and the X-state boundary.
void criterion_peres() {
    bool pass = true;
    int tested = 0;
    for (double p = -0.32; p <= 1.0 + 1e-12; p += 0.02) {
        DensityMatrix rho = werner_state(p);
        bool entangled = !peres_test(rho).is_ppt;
        pass = pass && (entangled == (p > 1.0 / 3.0));
        ++tested;
    }
    XStateResult boundary = x_state_check(werner_state(1.0 / 3.0).mat());
    pass = pass && std::abs(boundary.margin2) <= 1e-12;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "%d grid points, boundary margin %.2e", tested,
                  boundary.margin2);
    report(4, "peres-reproduction", pass, detail);
}

// 5. Generalized Werner spectrum and the PPT octahedron.
void criterion_generalized_werner() {
    bool pass = true;
    RandomStream stream(5);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        double mu1, mu2, mu3;
        while (true) {
            mu1 = 2.0 * stream.uniform() - 1.0;
            mu2 = 2.0 * stream.uniform() - 1.0;
            mu3 = 2.0 * stream.uniform() - 1.0;
            double lo = std::min(
                std::min(1 - mu1 - mu2 - mu3, 1 + mu1 + mu2 - mu3),
                std::min(1 + mu1 - mu2 + mu3, 1 - mu1 + mu2 + mu3));
            if (lo >= 0.0) break;
        }
        HermitianEigen e = eig_hermitian(generalized_werner(mu1, mu2, mu3).mat());
        std::vector<double> expected{
            (1 - mu1 - mu2 - mu3) / 4.0, (1 + mu1 + mu2 - mu3) / 4.0,
            (1 + mu1 - mu2 + mu3) / 4.0, (1 - mu1 + mu2 + mu3) / 4.0};
        std::sort(expected.begin(), expected.end(), std::greater<>());
        for (int i = 0; i < 4; ++i)
            worst = std::max(worst, std::abs(e.values(i) - expected[i]));
    }
    pass = pass && worst <= 1e-12;

    int states = 0, mismatches = 0;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b)
            for (int c = 0; c <= 8; ++c) {
                double mu1 = -1.0 + a / 4.0, mu2 = -1.0 + b / 4.0,
                       mu3 = -1.0 + c / 4.0;
                DensityMatrix* rho_ptr = nullptr;
                DensityMatrix rho = werner_state(0.0);
                try {
                    rho = generalized_werner(mu1, mu2, mu3);
                    rho_ptr = &rho;
                } catch (const std::invalid_argument&) {
                }
                if (!rho_ptr) continue;
                ++states;
                bool inside =
                    std::abs(mu1) + std::abs(mu2) + std::abs(mu3) <= 1.0 + 1e-12;
                if (peres_test(rho).is_ppt != inside) ++mismatches;
            }
    pass = pass && mismatches == 0;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "spectrum dev %.2e, %d grid states, %d mismatches", worst,
                  states, mismatches);
    report(5, "generalized-werner", pass, detail);
}

// 6. Superoperator algebra: actions, composition laws, moment determinants.
void criterion_superoperator_algebra() {
    RandomStream stream(6);
    bool pass = true;
    double worst_action = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Index n = 2 + trial % 3;
        ComplexMatrix g = random_gaussian(n, stream);
        ComplexMatrix m = random_gaussian(n, stream);
        ComplexMatrix u = haar_unitary(n, stream);
        worst_action = std::max(
            {worst_action,
             max_abs(action_superop(g, ActionMode::Left).apply(m) - g * m),
             max_abs(action_superop(g, ActionMode::Right).apply(m) - m * g),
             max_abs(action_superop(g, ActionMode::Similarity).apply(m) -
                     g * m * g.inverse()),
             max_abs(action_superop(u, ActionMode::Adjoint).apply(m) -
                     u * m * u.adjoint())});
    }
    pass = pass && worst_action <= 1e-10;

    // composition law: D(e1) o D(e2) multiplies the state coefficient
    double worst_comp = 0.0;
    for (double e1 : {-1.0, -0.3, 0.5, 1.0})
        for (double e2 : {-0.8, 0.25, 1.0})
            for (Index n : {2, 3}) {
                ComplexVector j = vec(ComplexMatrix::Identity(n, n)).data;
                ComplexMatrix expected =
                    e1 * e2 * ComplexMatrix::Identity(n * n, n * n) +
                    (1.0 - e1 * e2) / double(n) * (j * j.transpose());
                worst_comp = std::max(
                    worst_comp,
                    max_abs(compose(depolarizing(n, e1), depolarizing(n, e2)).mat() -
                            expected));
            }
    pass = pass && worst_comp <= 1e-12;

    // moment maps estimated from Haar SU(2) samples
    double worst_det = 0.0;
    bool blocks_ok = true;
    ComplexVector fixed(4);
    fixed << 0.5, 0.0, 0.0, 0.5;
    double worst_fixed = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        MomentMap mm[2];
        for (auto& m : mm) {
            m.ell = 0.0;
            m.m = m.n = m.s = m.q = Complex(0.0);
            const int samples = 2000;
            for (int s = 0; s < samples; ++s) {
                ComplexMatrix u = haar_unitary(2, stream);
                Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
                u /= std::sqrt(det);
                m.ell += std::norm(u(0, 0));
                m.m += u(0, 0) * std::conj(u(0, 1));
                m.n += u(0, 0) * u(0, 1);
                m.s += u(0, 0) * u(0, 0);
                m.q += u(0, 1) * u(0, 1);
            }
            m.ell /= samples;
            m.m /= samples;
            m.n /= samples;
            m.s /= samples;
            m.q /= samples;
        }
        Superoperator l0 = build_moment_map(mm[0]);
        Superoperator l1 = build_moment_map(mm[1]);
        worst_det = std::max(worst_det,
                             std::abs(moment_determinant(mm[0]) -
                                      l0.mat().determinant().real()));
        blocks_ok = blocks_ok && check_block_structure(l0.mat(), 1e-10) &&
                    check_block_structure(compose(l0, l1).mat(), 1e-10);
        worst_fixed = std::max(
            worst_fixed, (l0.mat() * fixed - fixed).cwiseAbs().maxCoeff());
    }
    pass = pass && worst_det <= 1e-10 && blocks_ok && worst_fixed <= 1e-12;

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "action dev %.2e, composition dev %.2e, det dev %.2e, "
                  "fixed-vector dev %.2e",
                  worst_action, worst_comp, worst_det, worst_fixed);
    report(6, "superoperator-algebra", pass, detail);
}

// 7. Tomogram properties and the analytic qubit form.
void criterion_tomograms() {
    RandomStream stream(7);
    bool pass = true;
    double worst_norm = 0.0, worst_min = 0.0, worst_lin = 0.0, worst_fact = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        DensityMatrix rho = random_density({2, 2}, stream);
        Tomogram t = unitary_tomogram(rho, haar_unitary(4, stream));
        worst_norm = std::max(worst_norm, std::abs(t.sum() - 1.0));
        worst_min = std::min(worst_min, t.min_value());

        ComplexMatrix a = random_hermitian(3, stream);
        ComplexMatrix b = random_hermitian(3, stream);
        ComplexMatrix g3 = haar_unitary(3, stream);
        double alpha = stream.gaussian(), beta = stream.gaussian();
        Tomogram ta = unitary_tomogram(a, g3, {3});
        Tomogram tb = unitary_tomogram(b, g3, {3});
        Tomogram tc = unitary_tomogram(alpha * a + beta * b, g3, {3});
        worst_lin = std::max(worst_lin,
                             (tc.values - alpha * ta.values - beta * tb.values)
                                 .cwiseAbs()
                                 .maxCoeff());

        DensityMatrix r1 = random_density({2}, stream);
        DensityMatrix r2 = random_density({2}, stream);
        ComplexMatrix u1 = haar_unitary(2, stream);
        ComplexMatrix u2 = haar_unitary(2, stream);
        Tomogram joint =
            unitary_tomogram(kron(r1.mat(), r2.mat()), kron(u1, u2), {2, 2});
        Tomogram t1 = unitary_tomogram(r1, u1);
        Tomogram t2 = unitary_tomogram(r2, u2);
        for (Index m1 = 0; m1 < 2; ++m1)
            for (Index m2 = 0; m2 < 2; ++m2)
                worst_fact = std::max(
                    worst_fact, std::abs(joint.values(m1 * 2 + m2) -
                                         t1.values(m1) * t2.values(m2)));
    }
    pass = pass && worst_norm <= 1e-10 && worst_min >= -1e-10 &&
           worst_lin <= 1e-12 && worst_fact <= 1e-12;

    double worst_analytic = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        double n1 = stream.gaussian(), n2 = stream.gaussian(),
               n3 = stream.gaussian();
        double len = 1.3 * std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
        n1 /= len;
        n2 /= len;
        n3 /= len;
        DensityMatrix rho(0.5 * (ComplexMatrix::Identity(2, 2) + n1 * pauli(1) +
                                 n2 * pauli(2) + n3 * pauli(3)));
        double theta = std::numbers::pi * stream.uniform();
        double phi = 2.0 * std::numbers::pi * stream.uniform();
        double dot = n1 * std::sin(theta) * std::cos(phi) +
                     n2 * std::sin(theta) * std::sin(phi) + n3 * std::cos(theta);
        Tomogram t = spin_tomogram(rho, {theta, phi});
        worst_analytic =
            std::max({worst_analytic, std::abs(t.values(0) - 0.5 * (1 + dot)),
                      std::abs(t.values(1) - 0.5 * (1 - dot))});
    }
    pass = pass && worst_analytic <= 1e-12;

    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "norm dev %.2e, min %.2e, linearity %.2e, factorization %.2e, "
                  "analytic %.2e",
                  worst_norm, worst_min, worst_lin, worst_fact, worst_analytic);
    report(7, "tomogram-properties", pass, detail);
}

// 8. The moduli-sum positivity criterion against the eigensolver.
void criterion_positivity() {
    RandomStream stream(8);
    int disagreements = 0;
    int total = 0;
    for (Index n : {3, 9}) {
        for (int trial = 0; trial < 100; ++trial) {
            ComplexMatrix a;
            if (trial % 2 == 0) {
                ComplexMatrix b = random_gaussian(n, stream);
                a = b.adjoint() * b;  // PSD
            } else {
                a = random_hermitian(n, stream);
            }
            bool psd_eig = min_eigenvalue(a) >= -1e-10;
            PositivityVerdict v = positivity_test(a, 20, stream);
            if (v.positive != psd_eig) ++disagreements;
            ++total;
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "%d matrices, %d disagreements", total,
                  disagreements);
    report(8, "positivity-criterion", disagreements == 0, detail);
}

// 9. Purification rank and the kappa-monotone purity of decohered mixtures.
void criterion_purification() {
    RandomStream stream(9);
    bool pass = true;
    double worst_second = 0.0, worst_trace = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        Index n = 2 + trial % 3;
        std::size_t terms = 2 + trial % 2;
        std::vector<DensityMatrix> states;
        std::vector<double> weights(terms);
        double total = 0.0;
        for (std::size_t k = 0; k < terms; ++k) {
            states.push_back(random_density({n}, stream));
            weights[k] = stream.uniform() + 0.1;
            total += weights[k];
        }
        for (auto& w : weights) w /= total;
        ComplexVector dir(n);
        for (Index i = 0; i < n; ++i)
            dir(i) = Complex(stream.gaussian(), stream.gaussian());
        ComplexMatrix fiducial = DensityMatrix::pure(dir, {n}).mat();
        DensityMatrix out = purify(weights, states, fiducial);
        HermitianEigen e = eig_hermitian(out.mat());
        worst_second = std::max(worst_second, std::abs(e.values(1)));
        worst_trace =
            std::max(worst_trace, std::abs(out.mat().trace().real() - 1.0));
    }
    pass = pass && worst_second <= 1e-10 && worst_trace <= 1e-12;

    bool monotone = true;
    for (int trial = 0; trial < 10; ++trial) {
        DensityMatrix rho = random_density({2}, stream);
        HermitianEigen e = eig_hermitian(rho.mat());
        DensityMatrix r1 = DensityMatrix::pure(e.vectors.col(0), {2});
        DensityMatrix r2 = DensityMatrix::pure(e.vectors.col(1), {2});
        ComplexVector dir(2);
        dir << Complex(stream.gaussian(), stream.gaussian()),
            Complex(stream.gaussian(), stream.gaussian());
        ComplexMatrix fiducial = DensityMatrix::pure(dir, {2}).mat();
        double previous = -1.0;
        for (double kappa : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            ComplexMatrix out = decohered_mixture(e.values(0), e.values(1), r1,
                                                  r2, kappa, fiducial);
            double purity = (out * out).trace().real();
            monotone = monotone && purity >= previous - 1e-14;
            previous = purity;
        }
    }
    pass = pass && monotone;
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "max second eigenvalue %.2e, max trace dev %.2e, monotone %s",
                  worst_second, worst_trace, monotone ? "yes" : "no");
    report(9, "purification", pass, detail);
}

// 10. Linear-inversion reconstruction round trip.
void criterion_reconstruction() {
    RandomStream stream(10);
    double worst = 0.0;
    for (Index n : {2, 3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            DensityMatrix rho = random_density({n}, stream);
            std::vector<TomogramMeasurement> ms;
            for (Index s = 0; s < 2 * n * n; ++s) {
                ComplexMatrix g = haar_unitary(n, stream);
                ms.push_back({g, unitary_tomogram(rho, g).values});
            }
            DensityMatrix recovered = reconstruct(ms, {n});
            worst = std::max(worst, hs_distance(recovered, rho));
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof(detail), "max round-trip error %.2e", worst);
    report(10, "reconstruction", worst <= 1e-8, detail);
}

}  // namespace

int main() {
    criterion_werner_boundary();
    criterion_closed_form();
    criterion_qutrits();
    criterion_peres();
    criterion_generalized_werner();
    criterion_superoperator_algebra();
    criterion_tomograms();
    criterion_positivity();
    criterion_purification();
    criterion_reconstruction();
    std::printf("%s: %d of 10 criteria failed\n",
                failures == 0 ? "SUCCESS" : "FAILURE", failures);
    return failures;
}
