/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "qtom/linmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtom {

namespace {

const Complex kI{0.0, 1.0};

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

MatVector vec(const ComplexMatrix& m) {
    MatVector out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.data.resize(m.size());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) out.data(i * m.cols() + j) = m(i, j);
    return out;
}

ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols) {
    if (v.size() != rows * cols) {
        std::ostringstream msg;
        msg << "unvec: vector of dimension " << v.size() << " does not match "
            << rows << "x" << cols << " = " << rows * cols;
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
    return m;
}

ComplexMatrix unvec(const MatVector& v) { return unvec(v.data, v.rows, v.cols); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ComplexMatrix pauli(int k) {
    ComplexMatrix s(2, 2);
    switch (k) {
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        case 3: s << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
    return s;
}

ComplexMatrix metric_matrix() {
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g(0, 0) = 1;
    g(1, 2) = 1;
    g(2, 1) = 1;
    g(3, 3) = 1;
    return g;
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, std::vector<Index> dims,
                             const Tolerances& tol)
    : mat_(std::move(mat)), dims_(std::move(dims)) {
    require(mat_.rows() == mat_.cols(), "DensityMatrix: matrix must be square");
    require(all_finite(mat_), "DensityMatrix: entries must be finite");
    if (dims_.empty()) dims_ = {mat_.rows()};
    Index prod = 1;
    for (Index d : dims_) {
        require(d >= 1, "DensityMatrix: subsystem dimensions must be positive");
        prod *= d;
    }
    if (prod != mat_.rows()) {
        std::ostringstream msg;
        msg << "DensityMatrix: dims product " << prod << " != matrix dimension "
            << mat_.rows();
        throw std::invalid_argument(msg.str());
    }
    double herm = max_abs(mat_ - mat_.adjoint());
    if (herm > tol.structural) {
        std::ostringstream msg;
        msg << "DensityMatrix: not Hermitian, residual " << herm;
        throw std::invalid_argument(msg.str());
    }
    Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0)) > tol.structural) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace " << tr.real() << " deviates from 1";
        throw std::invalid_argument(msg.str());
    }
    double lo = min_eigenvalue((mat_ + mat_.adjoint()) / 2.0);
    if (lo < -tol.spectral) {
        std::ostringstream msg;
        msg << "DensityMatrix: smallest eigenvalue " << lo << " below -"
            << tol.spectral;
        throw std::invalid_argument(msg.str());
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, const Tolerances& tol)
    : DensityMatrix(std::move(mat), std::vector<Index>{}, tol) {}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi,
                                  std::vector<Index> dims) {
    double norm = psi.norm();
    require(norm > 0, "DensityMatrix::pure: zero vector");
    ComplexVector unit = psi / norm;
    if (dims.empty()) dims = {psi.size()};
    return DensityMatrix(unit * unit.adjoint(), std::move(dims));
}

double DensityMatrix::purity() const { return (mat_ * mat_).trace().real(); }

Superoperator::Superoperator(ComplexMatrix mat) : mat_(std::move(mat)) {
    require(mat_.rows() == mat_.cols(), "Superoperator: matrix must be square");
    auto n = static_cast<Index>(std::llround(std::sqrt(double(mat_.rows()))));
    require(n * n == mat_.rows(),
            "Superoperator: dimension must be a perfect square");
    dim_ = n;
}

Superoperator Superoperator::identity(Index n) {
    return Superoperator(ComplexMatrix::Identity(n * n, n * n));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& m) const {
    if (m.rows() != dim_ || m.cols() != dim_) {
        std::ostringstream msg;
        msg << "Superoperator::apply: expected " << dim_ << "x" << dim_
            << ", got " << m.rows() << "x" << m.cols();
        throw std::invalid_argument(msg.str());
    }
    return unvec(ComplexVector(mat_ * vec(m).data), dim_, dim_);
}

Superoperator action_superop(const ComplexMatrix& g, ActionMode mode,
                             const Tolerances& tol) {
    require(g.rows() == g.cols(), "action_superop: g must be square");
    const Index n = g.rows();
    const ComplexMatrix one = ComplexMatrix::Identity(n, n);
    switch (mode) {
        case ActionMode::Left:
            return Superoperator(kron(g, one));
        case ActionMode::Right:
            return Superoperator(kron(one, g.transpose()));
        case ActionMode::Similarity: {
            Eigen::FullPivLU<ComplexMatrix> lu(g);
            if (!lu.isInvertible())
                throw std::invalid_argument(
                    "action_superop: singular g in similarity mode");
            return Superoperator(kron(g, lu.inverse().transpose()));
        }
        case ActionMode::Adjoint:
            if (!is_unitary(g, tol.spectral))
                throw std::invalid_argument(
                    "action_superop: g must be unitary in adjoint mode");
            return Superoperator(kron(g, g.conjugate()));
    }
    throw std::invalid_argument("action_superop: unknown mode");
}

RealEmbedding::RealEmbedding(Index n) : n_(n) {
    require(n >= 1, "RealEmbedding: dimension must be positive");
    s_ = ComplexMatrix::Zero(n * n, n * n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (Index j = 0; j < n; ++j) s_(j * n + j, j * n + j) = 1.0;
    for (Index j = 0; j < n; ++j) {
        for (Index k = j + 1; k < n; ++k) {
            const Index jk = j * n + k;
            const Index kj = k * n + j;
            s_(jk, jk) = inv_sqrt2;
            s_(jk, kj) = inv_sqrt2;
            s_(kj, jk) = -kI * inv_sqrt2;
            s_(kj, kj) = kI * inv_sqrt2;
        }
    }
}

RealVector RealEmbedding::embed(const ComplexMatrix& hermitian, double tol) const {
    require(hermitian.rows() == n_ && hermitian.cols() == n_,
            "RealEmbedding::embed: dimension mismatch");
    ComplexVector r = s_ * vec(hermitian).data;
    double residue = r.imag().cwiseAbs().maxCoeff();
    if (residue > tol) {
        std::ostringstream msg;
        msg << "RealEmbedding::embed: imaginary residue " << residue
            << " (non-Hermitian input)";
        throw std::invalid_argument(msg.str());
    }
    return r.real();
}

ComplexMatrix RealEmbedding::unembed(const RealVector& r) const {
    require(r.size() == n_ * n_, "RealEmbedding::unembed: dimension mismatch");
    ComplexVector v = s_.adjoint() * r.cast<Complex>();
    return unvec(v, n_, n_);
}

double hs_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    require(rho1.dim() == rho2.dim(), "hs_distance: dimension mismatch");
    ComplexMatrix d = rho1.mat() - rho2.mat();
    return std::sqrt(std::max(0.0, (d * d).trace().real()));
}

double sqrt_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    require(rho1.dim() == rho2.dim(), "sqrt_distance: dimension mismatch");
    ComplexMatrix d = psd_sqrt(rho1.mat()) - psd_sqrt(rho2.mat());
    return std::sqrt(std::max(0.0, (d * d).trace().real()));
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
    HermitianEigen eig = eig_hermitian(m, tol);
    RealVector roots(eig.values.size());
    for (Index i = 0; i < eig.values.size(); ++i) {
        double lambda = eig.values(i);
        if (lambda < -tol) {
            std::ostringstream msg;
            msg << "psd_sqrt: eigenvalue " << lambda << " below -" << tol;
            throw std::invalid_argument(msg.str());
        }
        roots(i) = std::sqrt(std::max(0.0, lambda));
    }
    return eig.vectors * roots.asDiagonal() * eig.vectors.adjoint();
}

namespace {

// Largest-magnitude component made real positive.
void canonicalize_phase(Eigen::Ref<ComplexVector> v) {
    Index arg = 0;
    double best = 0.0;
    for (Index i = 0; i < v.size(); ++i) {
        double a = std::abs(v(i));
        if (a > best) {
            best = a;
            arg = i;
        }
    }
    if (best == 0.0) return;
    v *= std::conj(v(arg)) / best;
}

bool lex_less(const ComplexVector& a, const ComplexVector& b) {
    for (Index i = 0; i < a.size(); ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return false;
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix& a, double tol) {
    require(a.rows() == a.cols(), "eig_hermitian: matrix must be square");
    double herm = max_abs(a - a.adjoint());
    if (herm > tol) {
        std::ostringstream msg;
        msg << "eig_hermitian: non-Hermitian input, residual " << herm;
        throw std::invalid_argument(msg.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver((a + a.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eig_hermitian: solver failed to converge");

    const Index n = a.rows();
    std::vector<ComplexVector> cols(n);
    for (Index i = 0; i < n; ++i) {
        cols[i] = solver.eigenvectors().col(i);
        canonicalize_phase(cols[i]);
    }
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Index lhs, Index rhs) {
        double vl = solver.eigenvalues()(lhs);
        double vr = solver.eigenvalues()(rhs);
        if (vl != vr) return vl > vr;
        return lex_less(cols[lhs], cols[rhs]);
    });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Index i = 0; i < n; ++i) {
        out.values(i) = solver.eigenvalues()(order[i]);
        out.vectors.col(i) = cols[order[i]];
    }
    return out;
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian);
    return solver.eigenvalues().minCoeff();
}

double trace_norm(const ComplexMatrix& hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian);
    return solver.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix haar_unitary(Index n, RandomStream& stream) {
    require(n >= 1, "haar_unitary: dimension must be positive");
    ComplexMatrix a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            a(i, j) = Complex(stream.gaussian(), stream.gaussian());
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Plain QR is not Haar: fix the phase ambiguity with Lambda = R_ii/|R_ii|.
    for (Index i = 0; i < n; ++i) {
        Complex d = r(i, i);
        double mag = std::abs(d);
        q.col(i) *= mag == 0.0 ? Complex(1.0) : d / mag;
    }
    return q;
}

ComplexMatrix random_hermitian(Index n, RandomStream& stream) {
    ComplexMatrix a(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            a(i, j) = Complex(stream.gaussian(), stream.gaussian());
    return (a + a.adjoint()) / 2.0;
}

DensityMatrix random_density(std::vector<Index> dims, RandomStream& stream) {
    Index n = 1;
    for (Index d : dims) n *= d;
    ComplexMatrix g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            g(i, j) = Complex(stream.gaussian(), stream.gaussian());
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace();
    return DensityMatrix((w + w.adjoint()) / 2.0, std::move(dims));
}

}  // namespace qtom
