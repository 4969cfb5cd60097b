/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_LINMAP_HPP
#define QTOM_LINMAP_HPP

#include <vector>

#include "qtom/types.hpp"

namespace qtom {

/// A matrix flattened row-major into a column vector, remembering the source
/// shape so the inverse map is unambiguous.
struct MatVector {
    ComplexVector data;
    Index rows = 0;
    Index cols = 0;

    Index dim() const { return data.size(); }
};

/// Row-major vectorization: component i*cols + d holds M(i, d).
MatVector vec(const ComplexMatrix& m);

/// Inverse of vec. Throws std::invalid_argument on a size mismatch.
ComplexMatrix unvec(const ComplexVector& v, Index rows, Index cols);
ComplexMatrix unvec(const MatVector& v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Pauli matrix sigma_k, k in {1, 2, 3}.
ComplexMatrix pauli(int k);

/// The 4x4 metric matrix pairing vec'd qubit matrices so that
/// <M1|M2> = Tr(M1^dag M2); it squares to the identity.
ComplexMatrix metric_matrix();

/// Hermitian, unit-trace, positive-semidefinite matrix together with its
/// subsystem dimension signature. The constructor validates all three
/// invariants and throws std::invalid_argument on violation.
class DensityMatrix {
  public:
    DensityMatrix(ComplexMatrix mat, std::vector<Index> dims,
                  const Tolerances& tol = {});
    explicit DensityMatrix(ComplexMatrix mat, const Tolerances& tol = {});

    static DensityMatrix pure(const ComplexVector& psi, std::vector<Index> dims);

    const ComplexMatrix& mat() const { return mat_; }
    const std::vector<Index>& dims() const { return dims_; }
    Index dim() const { return mat_.rows(); }
    double purity() const;

  private:
    ComplexMatrix mat_;
    std::vector<Index> dims_;
};

/// An n^2 x n^2 matrix acting on vec'd n x n matrices.
class Superoperator {
  public:
    Superoperator() = default;
    explicit Superoperator(ComplexMatrix mat);

    static Superoperator identity(Index n);

    Index dim() const { return dim_; }
    const ComplexMatrix& mat() const { return mat_; }

    /// unvec(mat * vec(m)).
    ComplexMatrix apply(const ComplexMatrix& m) const;

  private:
    ComplexMatrix mat_;
    Index dim_ = 0;
};

enum class ActionMode { Left, Right, Similarity, Adjoint };

/// Superoperator of the matrix action selected by mode:
///   Left       g (x) 1            M -> g M
///   Right      1 (x) g^T          M -> M g
///   Similarity g (x) (g^-1)^T     M -> g M g^-1   (g must be invertible)
///   Adjoint    g (x) g^*          M -> g M g^dag  (g must be unitary)
Superoperator action_superop(const ComplexMatrix& g, ActionMode mode,
                             const Tolerances& tol = {});

/// Unitary change of basis sending vec'd Hermitian matrices to real vectors:
/// diagonal entries pass through, each off-diagonal pair (j,k),(k,j) maps to
/// (sqrt2 Re, sqrt2 Im). Norm is preserved: |r|^2 = Tr rho^2.
class RealEmbedding {
  public:
    explicit RealEmbedding(Index n);

    Index n() const { return n_; }
    const ComplexMatrix& matrix() const { return s_; }

    /// Throws std::invalid_argument if the imaginary residue exceeds tol
    /// (non-Hermitian input).
    RealVector embed(const ComplexMatrix& hermitian, double tol = 1e-10) const;
    ComplexMatrix unembed(const RealVector& r) const;

  private:
    Index n_;
    ComplexMatrix s_;
};

/// Hilbert-Schmidt distance: D^2 = Tr(rho1 - rho2)^2.
double hs_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Square-root distance: D^2 = Tr(sqrt(rho1) - sqrt(rho2))^2.
double sqrt_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Matrix square root of a PSD matrix via eigendecomposition. Eigenvalues in
/// [-tol, 0) are clipped to zero; anything below -tol throws.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = 1e-10);

struct HermitianEigen {
    RealVector values;      // sorted descending
    ComplexMatrix vectors;  // columns, unitary, phase-canonicalized
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues are sorted
/// descending; each eigenvector's largest-magnitude component is made real
/// positive, and exact eigenvalue ties are broken by lexicographic comparison
/// of the canonicalized vectors. Throws on non-Hermitian input.
HermitianEigen eig_hermitian(const ComplexMatrix& a, double tol = 1e-10);

double min_eigenvalue(const ComplexMatrix& hermitian);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const ComplexMatrix& hermitian);

/// Haar-distributed random unitary: complex Gaussian matrix, QR, then the
/// diagonal phase correction that makes the distribution exactly invariant.
ComplexMatrix haar_unitary(Index n, RandomStream& stream);

ComplexMatrix random_hermitian(Index n, RandomStream& stream);

/// Full-rank random density matrix (normalized Wishart).
DensityMatrix random_density(std::vector<Index> dims, RandomStream& stream);

}  // namespace qtom

#endif
