/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/tomography.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qtom {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Index dims_product(const std::vector<Index>& dims) {
    Index n = 1;
    for (Index d : dims) n *= d;
    return n;
}

}  // namespace

Tomogram unitary_tomogram(const ComplexMatrix& a, const ComplexMatrix& g,
                          std::vector<Index> dims, const Tolerances& tol) {
    const Index n = a.rows();
    require(a.cols() == n, "unitary_tomogram: matrix must be square");
    if (dims.empty()) dims = {n};
    require(dims_product(dims) == n,
            "unitary_tomogram: dims do not match matrix dimension");
    if (!is_hermitian(a, tol.spectral))
        throw std::invalid_argument("unitary_tomogram: matrix must be Hermitian");
    if (!is_unitary(g, tol.spectral))
        throw std::invalid_argument("unitary_tomogram: g must be unitary");

    ComplexMatrix rotated = g.adjoint() * a * g;
    Tomogram t;
    t.dims = std::move(dims);
    t.group_element = g;
    t.values.resize(n);
    const double residue_cap = tol.structural * std::max(1.0, max_abs(a));
    for (Index m = 0; m < n; ++m) {
        Complex w = rotated(m, m);
        if (std::abs(w.imag()) > residue_cap) {
            std::ostringstream msg;
            msg << "unitary_tomogram: non-real value at outcome " << m
                << " (imag " << w.imag() << ")";
            throw std::runtime_error(msg.str());
        }
        t.values(m) = w.real();
    }
    return t;
}

Tomogram unitary_tomogram(const DensityMatrix& rho, const ComplexMatrix& g,
                          const Tolerances& tol) {
    return unitary_tomogram(rho.mat(), g, rho.dims(), tol);
}

ComplexMatrix angular_momentum_z(Index n) {
    require(n >= 1, "angular_momentum_z: dimension must be positive");
    const double j = (double(n) - 1.0) / 2.0;
    ComplexMatrix jz = ComplexMatrix::Zero(n, n);
    for (Index r = 0; r < n; ++r) jz(r, r) = j - double(r);
    return jz;
}

ComplexMatrix angular_momentum_y(Index n) {
    require(n >= 1, "angular_momentum_y: dimension must be positive");
    const double j = (double(n) - 1.0) / 2.0;
    ComplexMatrix jplus = ComplexMatrix::Zero(n, n);
    for (Index r = 1; r < n; ++r) {
        // row r holds m = j - r; J+ lifts |m> to |m+1> (row r-1)
        double m = j - double(r);
        jplus(r - 1, r) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const Complex half_i{0.0, 0.5};
    return -half_i * (jplus - jplus.adjoint());
}

ComplexMatrix spin_rotation(Index n, SpinDirection dir) {
    const Complex i{0.0, 1.0};
    ComplexMatrix jz = angular_momentum_z(n);
    ComplexMatrix phase = ComplexMatrix::Zero(n, n);
    for (Index r = 0; r < n; ++r)
        phase(r, r) = std::exp(-i * dir.phi * jz(r, r));

    HermitianEigen jy = eig_hermitian(angular_momentum_y(n));
    ComplexVector rot(n);
    for (Index r = 0; r < n; ++r) rot(r) = std::exp(-i * dir.theta * jy.values(r));
    ComplexMatrix tilt = jy.vectors * rot.asDiagonal() * jy.vectors.adjoint();
    return phase * tilt;
}

Tomogram spin_tomogram(const DensityMatrix& rho, SpinDirection dir) {
    require(rho.dims().size() == 1,
            "spin_tomogram: expected a single-subsystem state");
    return unitary_tomogram(rho, spin_rotation(rho.dim(), dir));
}

ComplexVector basic_symbols(const ComplexMatrix& g, Index j, Index k) {
    const Index n = g.rows();
    require(g.cols() == n, "basic_symbols: g must be square");
    require(j >= 0 && j < n && k >= 0 && k < n,
            "basic_symbols: indices out of range");
    ComplexVector w(n);
    for (Index m = 0; m < n; ++m) w(m) = std::conj(g(j, m)) * g(k, m);
    return w;
}

double tomographic_purity(const Tomogram& t, int k) {
    require(k >= 1, "tomographic_purity: order must be >= 1");
    double sum = 0.0;
    for (Index m = 0; m < t.values.size(); ++m)
        sum += std::pow(std::abs(t.values(m)), double(k));
    return sum;
}

PositivityVerdict positivity_test(const ComplexMatrix& a, std::size_t samples,
                                  RandomStream& stream, ExecPolicy policy,
                                  double tol) {
    const Index n = a.rows();
    require(a.cols() == n, "positivity_test: matrix must be square");
    if (!is_hermitian(a, 1e-10))
        throw std::invalid_argument("positivity_test: matrix must be Hermitian");

    std::vector<ComplexMatrix> candidates;
    candidates.reserve(samples + 1);
    candidates.push_back(eig_hermitian(a).vectors);
    for (std::size_t s = 0; s < samples; ++s)
        candidates.push_back(haar_unitary(n, stream));

    std::vector<double> sums(candidates.size());
    indexed_for(candidates.size(), policy, [&](std::size_t c) {
        const ComplexMatrix& u = candidates[c];
        ComplexMatrix rotated = u.adjoint() * a * u;
        double s = 0.0;
        for (Index m = 0; m < n; ++m) s += std::abs(rotated(m, m).real());
        sums[c] = s;
    });

    PositivityVerdict verdict;
    verdict.samples_used = samples;
    verdict.trace = a.trace().real();
    verdict.max_moduli_sum = 0.0;
    for (double s : sums) verdict.max_moduli_sum = std::max(verdict.max_moduli_sum, s);
    verdict.positive = verdict.max_moduli_sum <= verdict.trace + tol;
    return verdict;
}

std::vector<Tomogram> tomogram_batch(const ComplexMatrix& a,
                                     std::span<const ComplexMatrix> gs,
                                     std::vector<Index> dims,
                                     ExecPolicy policy) {
    std::vector<Tomogram> out(gs.size());
    indexed_for(gs.size(), policy, [&](std::size_t i) {
        out[i] = unitary_tomogram(a, gs[i], dims);
    });
    return out;
}

DensityMatrix reconstruct(std::span<const TomogramMeasurement> measurements,
                          std::vector<Index> dims) {
    const Index n = dims_product(dims);
    require(n >= 1 && !measurements.empty(),
            "reconstruct: need dims and at least one measurement");

    const RealEmbedding embedding(n);
    Index rows = 0;
    for (const auto& m : measurements) {
        require(m.g.rows() == n && m.g.cols() == n,
                "reconstruct: group element dimension mismatch");
        require(m.values.size() == n, "reconstruct: outcome count mismatch");
        rows += n;
    }

    // Tr(P rho) with P = g|m><m|g^dag is the real dot product of the
    // embeddings of P and rho.
    Eigen::MatrixXd system(rows, n * n);
    Eigen::VectorXd rhs(rows);
    Index r = 0;
    for (const auto& m : measurements) {
        for (Index k = 0; k < n; ++k) {
            ComplexVector column = m.g.col(k);
            ComplexMatrix projector = column * column.adjoint();
            system.row(r) = embedding.embed(projector).transpose();
            rhs(r) = m.values(k);
            ++r;
        }
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(system);
    qr.setThreshold(1e-8);
    if (qr.rank() < n * n) {
        std::ostringstream msg;
        msg << "reconstruct: measurement set spans rank " << qr.rank()
            << " of " << n * n << " required";
        throw std::invalid_argument(msg.str());
    }
    RealVector solution = qr.solve(rhs);
    ComplexMatrix rho = embedding.unembed(solution);
    rho = (rho + rho.adjoint()) / 2.0;
    rho /= rho.trace().real();
    return DensityMatrix(std::move(rho), std::move(dims));
}

}  // namespace qtom
