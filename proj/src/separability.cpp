/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/separability.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qtom {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Index dims_product(std::span<const Index> dims) {
    Index n = 1;
    for (Index d : dims) n *= d;
    return n;
}

std::vector<Index> decompose(Index flat, std::span<const Index> dims) {
    std::vector<Index> idx(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    return idx;
}

Index compose_index(std::span<const Index> idx, std::span<const Index> dims) {
    Index flat = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
    return flat;
}

void check_subsystem(std::span<const Index> dims, std::size_t subsystem) {
    if (subsystem < 1 || subsystem > dims.size()) {
        std::ostringstream msg;
        msg << "subsystem index " << subsystem << " out of range 1.."
            << dims.size();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                std::span<const Index> dims,
                                std::size_t subsystem) {
    const Index n = dims_product(dims);
    require(rho.rows() == n && rho.cols() == n,
            "partial_transpose: dims do not match matrix");
    check_subsystem(dims, subsystem);
    const std::size_t k = subsystem - 1;

    ComplexMatrix out(n, n);
    for (Index r = 0; r < n; ++r) {
        std::vector<Index> ri = decompose(r, dims);
        for (Index c = 0; c < n; ++c) {
            std::vector<Index> ci = decompose(c, dims);
            std::swap(ri[k], ci[k]);
            out(compose_index(ri, dims), compose_index(ci, dims)) = rho(r, c);
            std::swap(ri[k], ci[k]);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const Index> dims,
                            std::size_t subsystem) {
    const Index n = dims_product(dims);
    require(rho.rows() == n && rho.cols() == n,
            "partial_trace: dims do not match matrix");
    check_subsystem(dims, subsystem);
    const std::size_t k = subsystem - 1;

    std::vector<Index> rest;
    for (std::size_t l = 0; l < dims.size(); ++l)
        if (l != k) rest.push_back(dims[l]);
    const Index m = dims_product(rest);

    ComplexMatrix out = ComplexMatrix::Zero(m, m);
    for (Index r = 0; r < n; ++r) {
        std::vector<Index> ri = decompose(r, dims);
        for (Index c = 0; c < n; ++c) {
            std::vector<Index> ci = decompose(c, dims);
            if (ri[k] != ci[k]) continue;
            std::vector<Index> ro, co;
            for (std::size_t l = 0; l < dims.size(); ++l) {
                if (l == k) continue;
                ro.push_back(ri[l]);
                co.push_back(ci[l]);
            }
            out(compose_index(ro, rest), compose_index(co, rest)) += rho(r, c);
        }
    }
    return out;
}

PeresResult peres_test(const DensityMatrix& rho) {
    require(rho.dims().size() == 2, "peres_test: expected a bipartite state");
    ComplexMatrix pt = partial_transpose(rho.mat(), rho.dims(), 2);
    PeresResult result;
    result.min_eigenvalue = min_eigenvalue((pt + pt.adjoint()) / 2.0);
    result.is_ppt = result.min_eigenvalue >= -1e-10;
    return result;
}

XStateResult x_state_check(const ComplexMatrix& rho, double pattern_tol) {
    require(rho.rows() == 4 && rho.cols() == 4,
            "x_state_check: expected a 4x4 matrix");
    for (Index r = 0; r < 4; ++r) {
        for (Index c = 0; c < 4; ++c) {
            // X pattern: diagonal plus anti-diagonal
            bool on_pattern = (r == c) || (r + c == 3);
            if (!on_pattern && std::abs(rho(r, c)) > pattern_tol) {
                std::ostringstream msg;
                msg << "x_state_check: entry (" << r << "," << c
                    << ") breaks the X pattern";
                throw std::invalid_argument(msg.str());
            }
        }
    }
    const double big11 = rho(0, 0).real();
    const double big22 = rho(3, 3).real();
    const double small11 = rho(1, 1).real();
    const double small22 = rho(2, 2).real();
    XStateResult result;
    result.margin1 = big11 * big22 - std::norm(rho(1, 2));
    result.margin2 = small11 * small22 - std::norm(rho(0, 3));
    result.cond1 = result.margin1 >= 0.0;
    result.cond2 = result.margin2 >= 0.0;
    return result;
}

SubsystemMapEnsemble identity_ensemble(std::span<const Index> dims) {
    SubsystemMapTerm term;
    term.weight = 1.0;
    for (Index d : dims) term.factors.push_back(Superoperator::identity(d));
    return SubsystemMapEnsemble{{std::move(term)}};
}

SubsystemMapEnsemble single_subsystem_ensemble(std::span<const Index> dims,
                                               std::size_t subsystem,
                                               Superoperator map) {
    check_subsystem(dims, subsystem);
    require(map.dim() == dims[subsystem - 1],
            "single_subsystem_ensemble: map dimension mismatch");
    SubsystemMapTerm term;
    term.weight = 1.0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (k + 1 == subsystem)
            term.factors.push_back(map);
        else
            term.factors.push_back(Superoperator::identity(dims[k]));
    }
    return SubsystemMapEnsemble{{std::move(term)}};
}

Superoperator ensemble_superop(const SubsystemMapEnsemble& ensemble,
                               std::span<const Index> dims) {
    require(!ensemble.terms.empty(), "ensemble_superop: empty ensemble");
    const Index n = dims_product(dims);
    double total = 0.0;
    for (const auto& term : ensemble.terms) {
        require(term.weight >= 0.0, "ensemble_superop: negative weight");
        total += term.weight;
        require(term.factors.size() == dims.size(),
                "ensemble_superop: factor count does not match dims");
        for (std::size_t k = 0; k < dims.size(); ++k)
            require(term.factors[k].dim() == dims[k],
                    "ensemble_superop: factor dimension mismatch");
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("ensemble_superop: weights must sum to 1");

    // The Kronecker product of the factor matrices indexes each slot by the
    // pair (i_k, j_k); the composite vec index keeps all row indices first.
    // perm maps vec index -> kron index so we can relabel rows and columns.
    std::vector<Index> pair_dims;
    for (Index d : dims) pair_dims.push_back(d * d);
    std::vector<Index> perm(n * n);
    std::vector<Index> both(dims.size());
    for (Index r = 0; r < n; ++r) {
        std::vector<Index> ri = decompose(r, dims);
        for (Index c = 0; c < n; ++c) {
            std::vector<Index> ci = decompose(c, dims);
            for (std::size_t k = 0; k < dims.size(); ++k)
                both[k] = ri[k] * dims[k] + ci[k];
            perm[r * n + c] =
                compose_index(std::span<const Index>(both.data(), dims.size()),
                              pair_dims);
        }
    }

    ComplexMatrix mat = ComplexMatrix::Zero(n * n, n * n);
    for (const auto& term : ensemble.terms) {
        ComplexMatrix k = term.factors.front().mat();
        for (std::size_t f = 1; f < term.factors.size(); ++f)
            k = kron(k, term.factors[f].mat());
        for (Index a = 0; a < n * n; ++a)
            for (Index b = 0; b < n * n; ++b)
                mat(a, b) += term.weight * k(perm[a], perm[b]);
    }
    return Superoperator(std::move(mat));
}

double witness_F_transformed(const ComplexMatrix& rho_l,
                             std::span<const Index> dims,
                             const ComplexMatrix& g) {
    if (max_abs(rho_l - rho_l.adjoint()) > 1e-10)
        throw std::invalid_argument(
            "witness_F: transformed matrix is not Hermitian");
    return unitary_tomogram(rho_l, g,
                            std::vector<Index>(dims.begin(), dims.end()))
        .moduli_sum();
}

double witness_F(const DensityMatrix& rho, const SubsystemMapEnsemble& ensemble,
                 const ComplexMatrix& g) {
    Superoperator l = ensemble_superop(ensemble, rho.dims());
    return witness_F_transformed(l.apply(rho.mat()), rho.dims(), g);
}

std::vector<double> depolarizing_grid(Index subsystem_dim, std::size_t points) {
    require(points >= 1, "depolarizing_grid: need at least one point");
    const double hi = depolarizing_positive_limit(subsystem_dim);
    std::vector<double> grid(points);
    if (points == 1) {
        grid[0] = hi;
        return grid;
    }
    for (std::size_t i = 0; i < points; ++i)
        grid[i] = -1.0 + (hi + 1.0) * double(i) / double(points - 1);
    grid.back() = hi;
    return grid;
}

namespace {

WitnessResult scan_transformed(
    const DensityMatrix& rho,
    const std::vector<Superoperator>& maps,
    const std::vector<double>& eps_of_map,  // empty for explicit families
    const ScanConfig& cfg) {
    const Index n = rho.dim();
    const std::size_t m = maps.size();

    RandomStream stream(cfg.seed);
    std::vector<ComplexMatrix> samples;
    samples.reserve(cfg.g_samples);
    for (std::size_t s = 0; s < cfg.g_samples; ++s)
        samples.push_back(haar_unitary(n, stream));

    // Exceptions may not escape the parallel region; collect the Hermiticity
    // residues and report after the loop.
    std::vector<ComplexMatrix> transformed(m);
    std::vector<ComplexMatrix> diagonalizers(m);
    std::vector<double> herm_residue(m);
    indexed_for(m, cfg.policy, [&](std::size_t e) {
        ComplexMatrix rho_l = maps[e].apply(rho.mat());
        transformed[e] = (rho_l + rho_l.adjoint()) / 2.0;
        herm_residue[e] = max_abs(rho_l - transformed[e]);
        diagonalizers[e] = eig_hermitian(transformed[e]).vectors;
    });
    for (std::size_t e = 0; e < m; ++e)
        if (herm_residue[e] > 1e-10)
            throw std::invalid_argument(
                "witness_scan: map produced a non-Hermitian matrix");

    const std::size_t per_map = 1 + cfg.g_samples;
    std::vector<double> f(m * per_map);
    indexed_for(m * per_map, cfg.policy, [&](std::size_t t) {
        const std::size_t e = t / per_map;
        const std::size_t c = t % per_map;
        const ComplexMatrix& g = c == 0 ? diagonalizers[e] : samples[c - 1];
        f[t] = witness_F_transformed(transformed[e], rho.dims(), g);
    });

    WitnessResult result;
    result.samples_used = m * per_map;
    result.f_max = -std::numeric_limits<double>::infinity();
    std::size_t best = 0;
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (f[t] > result.f_max) {
            result.f_max = f[t];
            best = t;
        }
    }
    const std::size_t e = best / per_map;
    const std::size_t c = best % per_map;
    result.argmax_index = e;
    result.argmax_g = c == 0 ? diagonalizers[e] : samples[c - 1];
    result.argmax_eps = eps_of_map.empty()
                            ? std::numeric_limits<double>::quiet_NaN()
                            : eps_of_map[e];
    result.entangled = result.f_max > 1.0 + cfg.threshold;
    return result;
}

}  // namespace

WitnessResult witness_scan(const DensityMatrix& rho, const ScanConfig& cfg) {
    const auto& dims = rho.dims();
    std::size_t subsystem = cfg.subsystem == 0 ? dims.size() : cfg.subsystem;
    check_subsystem(dims, subsystem);
    const Index d = dims[subsystem - 1];

    std::vector<double> grid = depolarizing_grid(d, cfg.eps_points);
    std::vector<Superoperator> maps;
    maps.reserve(grid.size());
    for (double eps : grid)
        maps.push_back(ensemble_superop(
            single_subsystem_ensemble(dims, subsystem, depolarizing(d, eps)),
            dims));
    return scan_transformed(rho, maps, grid, cfg);
}

WitnessResult witness_scan(const DensityMatrix& rho,
                           std::span<const SubsystemMapEnsemble> family,
                           const ScanConfig& cfg) {
    require(!family.empty(), "witness_scan: empty ensemble family");
    std::vector<Superoperator> maps;
    maps.reserve(family.size());
    for (const auto& ensemble : family)
        maps.push_back(ensemble_superop(ensemble, rho.dims()));
    return scan_transformed(rho, maps, {}, cfg);
}

DensityMatrix werner_state(double p) {
    if (p < -1.0 / 3.0 - 1e-12 || p > 1.0 + 1e-12) {
        std::ostringstream msg;
        msg << "werner_state: p = " << p << " outside the PSD range [-1/3, 1]";
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = rho(3, 3) = (1.0 + p) / 4.0;
    rho(1, 1) = rho(2, 2) = (1.0 - p) / 4.0;
    rho(0, 3) = rho(3, 0) = p / 2.0;
    return DensityMatrix(std::move(rho), std::vector<Index>{2, 2});
}

DensityMatrix generalized_werner(double mu1, double mu2, double mu3) {
    // The four eigenvalues carry the sign patterns with an odd number of
    // minus signs; reject points outside the state tetrahedron.
    const double eigs[4] = {
        (1.0 - mu1 - mu2 - mu3) / 4.0, (1.0 + mu1 + mu2 - mu3) / 4.0,
        (1.0 + mu1 - mu2 + mu3) / 4.0, (1.0 - mu1 + mu2 + mu3) / 4.0};
    for (double lambda : eigs) {
        if (lambda < -1e-12) {
            std::ostringstream msg;
            msg << "generalized_werner: point (" << mu1 << ", " << mu2 << ", "
                << mu3 << ") is not PSD (eigenvalue " << lambda << ")";
            throw std::invalid_argument(msg.str());
        }
    }
    ComplexMatrix rho = ComplexMatrix::Identity(4, 4);
    rho += mu1 * kron(pauli(1), pauli(1));
    rho += mu2 * kron(pauli(2), pauli(2));
    rho += mu3 * kron(pauli(3), pauli(3));
    rho /= 4.0;
    return DensityMatrix(std::move(rho), std::vector<Index>{2, 2});
}

DensityMatrix qutrit_pair(QutritPairKind kind) {
    ComplexVector psi = ComplexVector::Zero(9);
    if (kind == QutritPairKind::ThreeTerm) {
        const double w = 1.0 / std::sqrt(3.0);
        psi(0) = psi(4) = psi(8) = w;  // |00> + |11> + |22>
    } else {
        const double w = 1.0 / std::sqrt(2.0);
        psi(0) = psi(4) = w;  // |00> + |11>
    }
    return DensityMatrix::pure(psi, {3, 3});
}

ComplexMatrix multipartite_depolarize(const DensityMatrix& rho,
                                      std::span<const double> eps) {
    const auto& dims = rho.dims();
    require(eps.size() == dims.size(),
            "multipartite_depolarize: one parameter per subsystem required");
    SubsystemMapTerm term;
    term.weight = 1.0;
    for (std::size_t k = 0; k < dims.size(); ++k)
        term.factors.push_back(depolarizing(dims[k], eps[k]));
    Superoperator l = ensemble_superop(SubsystemMapEnsemble{{std::move(term)}},
                                       dims);
    return l.apply(rho.mat());
}

ComplexMatrix werner_g0() {
    const double w = 1.0 / std::sqrt(2.0);
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g(0, 0) = w;
    g(3, 0) = w;
    g(1, 1) = 1.0;
    g(2, 2) = 1.0;
    g(0, 3) = w;
    g(3, 3) = -w;
    return g;
}

}  // namespace qtom
