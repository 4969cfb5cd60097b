/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_TOMOGRAPHY_HPP
#define QTOM_TOMOGRAPHY_HPP

#include <span>
#include <vector>

#include "qtom/exec.hpp"
#include "qtom/linmap.hpp"

namespace qtom {

/// Measurement-outcome table of a Hermitian matrix under a group element g:
/// values[m] = <m| g^dag A g |m>, indexed row-major by the outcome
/// multi-index (m_1, ..., m_N) with subsystem 1 slowest. Values sum to Tr A
/// and may be negative when A is not a state.
struct Tomogram {
    std::vector<Index> dims;
    RealVector values;
    ComplexMatrix group_element;

    double sum() const { return values.sum(); }
    double min_value() const { return values.minCoeff(); }
    double moduli_sum() const { return values.cwiseAbs().sum(); }
};

/// Measurement direction on the sphere; theta in [0, pi], phi in [0, 2 pi).
struct SpinDirection {
    double theta = 0.0;
    double phi = 0.0;
};

Tomogram unitary_tomogram(const ComplexMatrix& a, const ComplexMatrix& g,
                          std::vector<Index> dims, const Tolerances& tol = {});
Tomogram unitary_tomogram(const DensityMatrix& rho, const ComplexMatrix& g,
                          const Tolerances& tol = {});

/// Angular-momentum matrices for dimension n = 2j+1, rows indexed by
/// m = j, j-1, ..., -j (standard ladder-operator matrix elements).
ComplexMatrix angular_momentum_y(Index n);
ComplexMatrix angular_momentum_z(Index n);

/// Rotation exp(-i phi J_z) exp(-i theta J_y); only two Euler angles enter,
/// the third is fixed to zero.
ComplexMatrix spin_rotation(Index n, SpinDirection dir);

/// Spin tomogram of a single-subsystem state under the rotation to dir.
/// Outcome index 0 corresponds to m = +j.
Tomogram spin_tomogram(const DensityMatrix& rho, SpinDirection dir);

/// Symbols of the transition operators E_jk (0-based indices j, k):
/// component m is <m| g^dag E_jk g |m> = conj(g_jm) g_km. Complex for j != k;
/// any tomogram is the rho_jk-weighted sum of these.
ComplexVector basic_symbols(const ComplexMatrix& g, Index j, Index k);

/// Sum of |values|^k.
double tomographic_purity(const Tomogram& t, int k);

struct PositivityVerdict {
    bool positive = false;
    double max_moduli_sum = 0.0;
    double trace = 0.0;
    std::size_t samples_used = 0;
};

/// Positivity test for a Hermitian matrix: A is PSD iff the sum of moduli of
/// the diagonal of U^dag A U equals Tr A for every unitary U. The candidate
/// set is `samples` Haar unitaries plus the eigenvector matrix of A; the
/// latter attains the maximum (the trace norm), so the verdict is exact.
PositivityVerdict positivity_test(const ComplexMatrix& a, std::size_t samples,
                                  RandomStream& stream,
                                  ExecPolicy policy = ExecPolicy::Parallel,
                                  double tol = 1e-9);

/// Tomograms of one matrix under many group elements; results are ordered by
/// input index independent of scheduling.
std::vector<Tomogram> tomogram_batch(const ComplexMatrix& a,
                                     std::span<const ComplexMatrix> gs,
                                     std::vector<Index> dims,
                                     ExecPolicy policy = ExecPolicy::Parallel);

struct TomogramMeasurement {
    ComplexMatrix g;
    RealVector values;
};

/// Linear-inversion reconstruction from tomographic data. Builds the real
/// least-squares system over projectors g|m><m|g^dag, requires rank n^2
/// (throws reporting the achieved rank otherwise), Hermitizes and
/// renormalizes the solution.
DensityMatrix reconstruct(std::span<const TomogramMeasurement> measurements,
                          std::vector<Index> dims);

}  // namespace qtom

#endif
