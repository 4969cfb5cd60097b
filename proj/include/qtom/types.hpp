/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_TYPES_HPP
#define QTOM_TYPES_HPP

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qtom {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Structural checks (shapes, traces, exact algebra) default to 1e-12,
/// spectral checks (eigenvalues, unitarity of computed matrices) to 1e-10.
struct Tolerances {
    double structural = 1e-12;
    double spectral = 1e-10;
};

/// Deterministic random source. Every sampling routine takes a stream
/// explicitly; there is no hidden global state.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed = 0) : engine_(seed) {}

    double gaussian() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

    /// Derives a seed for an independent child stream.
    std::uint64_t fork_seed() { return engine_(); }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

inline double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool all_finite(const ComplexMatrix& m) {
    return m.allFinite();
}

inline bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

inline bool is_unitary(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    ComplexMatrix residual = m.adjoint() * m;
    residual -= ComplexMatrix::Identity(m.rows(), m.cols());
    return max_abs(residual) <= tol;
}

/// Execution policy for the data-parallel kernels (witness scans, tomogram
/// batches, positivity sampling). Serial is the reference path; Parallel uses
/// OpenMP when available and must produce identical results.
enum class ExecPolicy { Serial, Parallel };

}  // namespace qtom

#endif
