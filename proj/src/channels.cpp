/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qtom {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

ComplexVector identity_vec(Index n) {
    return vec(ComplexMatrix::Identity(n, n)).data;
}

}  // namespace

KrausMap::KrausMap(std::vector<ComplexMatrix> positive,
                   std::vector<ComplexMatrix> negative, double tol)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
    require(!positive_.empty(), "KrausMap: positive part must be nonempty");
    dim_ = positive_.front().rows();
    auto check_shape = [&](const ComplexMatrix& v) {
        require(v.rows() == dim_ && v.cols() == dim_,
                "KrausMap: all operators must share one square dimension");
    };
    for (const auto& v : positive_) check_shape(v);
    for (const auto& v : negative_) check_shape(v);

    ComplexMatrix sum = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& v : positive_) sum += v.adjoint() * v;
    for (const auto& v : negative_) sum -= v.adjoint() * v;
    sum -= ComplexMatrix::Identity(dim_, dim_);
    if (max_abs(sum) > tol) {
        std::ostringstream msg;
        msg << "KrausMap: completeness violated, residual " << max_abs(sum);
        throw std::invalid_argument(msg.str());
    }
}

KrausMap KrausMap::identity(Index n) {
    return KrausMap({ComplexMatrix::Identity(n, n)});
}

KrausMap KrausMap::decoherence(Index n) {
    std::vector<ComplexMatrix> vs;
    vs.reserve(n);
    for (Index k = 0; k < n; ++k) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(k, k) = 1.0;
        vs.push_back(e);
    }
    return KrausMap(std::move(vs));
}

KrausMap KrausMap::transpose_qubit() {
    const double w = 1.0 / std::sqrt(2.0);
    std::vector<ComplexMatrix> pos{w * ComplexMatrix::Identity(2, 2),
                                   w * pauli(1), w * pauli(3)};
    std::vector<ComplexMatrix> neg{w * pauli(2)};
    return KrausMap(std::move(pos), std::move(neg));
}

KrausMap KrausMap::depolarizing_probe(Index n, double eps) {
    require(eps >= 0.0, "KrausMap::depolarizing_probe: eps must be >= 0");
    std::vector<ComplexMatrix> pos;
    pos.reserve(n * n);
    const double w = std::sqrt((1.0 + eps) / double(n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(n, n);
            e(i, j) = w;
            pos.push_back(e);
        }
    std::vector<ComplexMatrix> neg;
    if (eps > 0.0)
        neg.push_back(std::sqrt(eps) * ComplexMatrix::Identity(n, n));
    return KrausMap(std::move(pos), std::move(neg));
}

ComplexMatrix kraus_apply(const KrausMap& k, const ComplexMatrix& rho) {
    require(rho.rows() == k.dim() && rho.cols() == k.dim(),
            "kraus_apply: dimension mismatch");
    ComplexMatrix out = ComplexMatrix::Zero(k.dim(), k.dim());
    for (const auto& v : k.positive_part()) out += v * rho * v.adjoint();
    for (const auto& v : k.negative_part()) out -= v * rho * v.adjoint();
    return out;
}

Superoperator kraus_superop(const KrausMap& k) {
    const Index n2 = k.dim() * k.dim();
    ComplexMatrix mat = ComplexMatrix::Zero(n2, n2);
    for (const auto& v : k.positive_part()) mat += kron(v, v.conjugate());
    for (const auto& v : k.negative_part()) mat -= kron(v, v.conjugate());
    return Superoperator(std::move(mat));
}

Superoperator random_unitary_mix(std::span<const double> weights,
                                 std::span<const ComplexMatrix> unitaries,
                                 double tol) {
    require(!weights.empty() && weights.size() == unitaries.size(),
            "random_unitary_mix: weights and unitaries must match");
    double total = 0.0;
    for (double w : weights) {
        require(w >= 0.0, "random_unitary_mix: negative weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("random_unitary_mix: weights must sum to 1");
    const Index n = unitaries.front().rows();
    ComplexMatrix mat = ComplexMatrix::Zero(n * n, n * n);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const ComplexMatrix& u = unitaries[k];
        require(u.rows() == n && u.cols() == n,
                "random_unitary_mix: dimension mismatch");
        if (!is_unitary(u, tol))
            throw std::invalid_argument("random_unitary_mix: non-unitary term");
        mat += weights[k] * kron(u, u.conjugate());
    }
    return Superoperator(std::move(mat));
}

Superoperator build_moment_map(const MomentMap& mm) {
    require(mm.ell >= 0.0 && mm.ell <= 1.0,
            "build_moment_map: ell must lie in [0, 1]");
    auto check_mod = [](Complex z, const char* name) {
        if (std::abs(z) > 1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "build_moment_map: |" << name << "| = " << std::abs(z)
                << " exceeds 1";
            throw std::invalid_argument(msg.str());
        }
    };
    check_mod(mm.m, "m");
    check_mod(mm.n, "n");
    check_mod(mm.s, "s");
    check_mod(mm.q, "q");

    const Complex m = mm.m, n = mm.n, s = mm.s, q = mm.q;
    const double ell = mm.ell;
    ComplexMatrix l(4, 4);
    l << ell, m, std::conj(m), 1.0 - ell,
        -n, s, -q, n,
        -std::conj(n), -std::conj(q), std::conj(s), std::conj(n),
        1.0 - ell, -m, -std::conj(m), ell;
    return Superoperator(std::move(l));
}

double moment_determinant(const MomentMap& mm) {
    const double qq = std::norm(mm.q);
    const double ss = std::norm(mm.s);
    const Complex cross =
        std::conj(mm.q) * std::conj(mm.m) * mm.n + mm.m * mm.n * std::conj(mm.s);
    return (1.0 - 2.0 * mm.ell) * (qq - ss) + 4.0 * cross.real();
}

bool check_block_structure(const ComplexMatrix& mat4, double tol) {
    require(mat4.rows() == 4 && mat4.cols() == 4,
            "check_block_structure: expected a 4x4 matrix");
    const ComplexMatrix s2 = pauli(2);
    ComplexMatrix a = mat4.block(0, 0, 2, 2);
    ComplexMatrix b = mat4.block(0, 2, 2, 2);
    ComplexMatrix c = mat4.block(2, 0, 2, 2);
    ComplexMatrix d = mat4.block(2, 2, 2, 2);
    return max_abs(d - s2 * a.conjugate() * s2) <= tol &&
           max_abs(c + s2 * b.conjugate() * s2) <= tol;
}

Superoperator depolarizing(Index n, double eps) {
    require(n >= 1, "depolarizing: dimension must be positive");
    ComplexVector j = identity_vec(n);
    ComplexMatrix mat = -eps * ComplexMatrix::Identity(n * n, n * n);
    mat += ((1.0 + eps) / double(n)) * (j * j.transpose());
    return Superoperator(std::move(mat));
}

bool depolarizing_in_semigroup(double eps) {
    return eps >= -1.0 && eps <= 1.0;
}

double depolarizing_positive_limit(Index n) {
    return n > 1 ? 1.0 / double(n - 1) : 1.0;
}

Superoperator phase_damping(Index n, double lambda) {
    require(n >= 1, "phase_damping: dimension must be positive");
    ComplexMatrix mat = lambda * ComplexMatrix::Identity(n * n, n * n);
    for (Index i = 0; i < n; ++i) mat(i * n + i, i * n + i) = 1.0;
    return Superoperator(std::move(mat));
}

Superoperator transpose_superop(Index n) {
    ComplexMatrix mat = ComplexMatrix::Zero(n * n, n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) mat(i * n + j, j * n + i) = 1.0;
    return Superoperator(std::move(mat));
}

ComplexMatrix transpose_map_qubit(const ComplexMatrix& rho) {
    require(rho.rows() == 2 && rho.cols() == 2,
            "transpose_map_qubit: expected a 2x2 matrix");
    return 0.5 * (rho + pauli(1) * rho * pauli(1) - pauli(2) * rho * pauli(2) +
                  pauli(3) * rho * pauli(3));
}

Superoperator entanglement_breaking(std::span<const DensityMatrix> states,
                                    std::span<const ComplexMatrix> effects,
                                    double tol) {
    require(!states.empty() && states.size() == effects.size(),
            "entanglement_breaking: states and effects must match");
    const Index n = states.front().dim();
    ComplexMatrix total = ComplexMatrix::Zero(n, n);
    for (const auto& r : effects) {
        require(r.rows() == n && r.cols() == n,
                "entanglement_breaking: effect dimension mismatch");
        if (!is_hermitian(r, tol) || min_eigenvalue((r + r.adjoint()) / 2.0) < -tol)
            throw std::invalid_argument("entanglement_breaking: effects must be PSD");
        total += r;
    }
    total -= ComplexMatrix::Identity(n, n);
    if (max_abs(total) > tol) {
        std::ostringstream msg;
        msg << "entanglement_breaking: effects do not sum to identity, residual "
            << max_abs(total);
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix mat = ComplexMatrix::Zero(n * n, n * n);
    for (std::size_t k = 0; k < states.size(); ++k) {
        require(states[k].dim() == n,
                "entanglement_breaking: state dimension mismatch");
        mat += vec(states[k].mat()).data * vec(effects[k]).data.adjoint();
    }
    return Superoperator(std::move(mat));
}

Superoperator diag_complement(Index n, bool trace_preserving) {
    require(n >= 2, "diag_complement: dimension must be at least 2");
    ComplexVector j = identity_vec(n);
    ComplexMatrix mat = j * j.transpose();
    for (Index i = 0; i < n; ++i) mat(i * n + i, i * n + i) -= 1.0;
    mat /= double(trace_preserving ? n - 1 : n);
    return Superoperator(std::move(mat));
}

ChannelReport contraction_kappa(const Superoperator& l, const DensityMatrix& rho) {
    ComplexMatrix out = l.apply(rho.mat());
    ChannelReport report;
    report.trace_preserved = std::abs(out.trace() - Complex(1.0)) <= 1e-10;
    report.hermiticity_preserved = max_abs(out - out.adjoint()) <= 1e-10;
    ComplexMatrix herm = (out + out.adjoint()) / 2.0;
    report.min_output_eigenvalue = min_eigenvalue(herm);
    report.kappa = (out * out).trace().real() / rho.purity();
    return report;
}

Superoperator compose(const Superoperator& l1, const Superoperator& l2) {
    if (l1.dim() != l2.dim()) {
        std::ostringstream msg;
        msg << "compose: dimension mismatch " << l1.dim() << " vs " << l2.dim();
        throw std::invalid_argument(msg.str());
    }
    return Superoperator(l1.mat() * l2.mat());
}

namespace {

// <phi|rho|phi> for the rank-one fiducial P0 = |phi><phi|, computed as
// Tr(rho P0); real and nonnegative for PSD rho.
double fiducial_overlap(const ComplexMatrix& rho, const ComplexMatrix& p0) {
    return (rho * p0).trace().real();
}

void check_fiducial(const ComplexMatrix& p0, Index n) {
    require(p0.rows() == n && p0.cols() == n, "fiducial: dimension mismatch");
    require(is_hermitian(p0, 1e-10), "fiducial: must be Hermitian");
    require(std::abs(p0.trace() - Complex(1.0)) <= 1e-10,
            "fiducial: must have unit trace");
    require(max_abs(p0 * p0 - p0) <= 1e-8, "fiducial: must be a projector");
}

}  // namespace

DensityMatrix purify(std::span<const double> weights,
                     std::span<const DensityMatrix> states,
                     const ComplexMatrix& fiducial) {
    require(!weights.empty() && weights.size() == states.size(),
            "purify: weights and states must match");
    const Index n = states.front().dim();
    check_fiducial(fiducial, n);

    std::vector<double> overlaps(states.size());
    for (std::size_t k = 0; k < states.size(); ++k) {
        require(states[k].dim() == n, "purify: state dimension mismatch");
        overlaps[k] = fiducial_overlap(states[k].mat(), fiducial);
        if (weights[k] > 0.0 && overlaps[k] * overlaps[k] <= 1e-14) {
            std::ostringstream msg;
            msg << "purify: fiducial projector orthogonal to state " << k;
            throw std::invalid_argument(msg.str());
        }
    }

    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (weights[k] == 0.0) continue;
        for (std::size_t j = 0; j < states.size(); ++j) {
            if (weights[j] == 0.0) continue;
            // Tr(rho_k P0 rho_j P0) = <phi|rho_k|phi><phi|rho_j|phi>
            double norm = std::sqrt(overlaps[k] * overlaps[j]);
            sum += std::sqrt(weights[k] * weights[j]) / norm *
                   (states[k].mat() * fiducial * states[j].mat());
        }
    }
    sum /= sum.trace();
    return DensityMatrix((sum + sum.adjoint()) / 2.0,
                         states.front().dims());
}

ComplexMatrix decohered_mixture(double p1, double p2, const DensityMatrix& rho1,
                                const DensityMatrix& rho2, double kappa,
                                const ComplexMatrix& fiducial) {
    require(std::abs(p1 + p2 - 1.0) <= 1e-12,
            "decohered_mixture: weights must sum to 1");
    require(p1 >= 0.0 && p2 >= 0.0, "decohered_mixture: negative weight");
    require(kappa >= 0.0 && kappa <= 1.0,
            "decohered_mixture: kappa must lie in [0, 1]");
    require(rho1.dim() == rho2.dim(), "decohered_mixture: dimension mismatch");
    check_fiducial(fiducial, rho1.dim());

    double t = fiducial_overlap(rho1.mat(), fiducial) *
               fiducial_overlap(rho2.mat(), fiducial);
    if (t <= 1e-14)
        throw std::invalid_argument(
            "decohered_mixture: fiducial projector orthogonal to an input state");
    ComplexMatrix cross = rho1.mat() * fiducial * rho2.mat() +
                          rho2.mat() * fiducial * rho1.mat();
    return p1 * rho1.mat() + p2 * rho2.mat() +
           kappa * std::sqrt(p1 * p2) / std::sqrt(t) * cross;
}

}  // namespace qtom
