/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_SEPARABILITY_HPP
#define QTOM_SEPARABILITY_HPP

#include <span>
#include <vector>

#include "qtom/channels.hpp"
#include "qtom/tomography.hpp"

namespace qtom {

// Subsystem indices are 1-based; subsystem 1 is the leftmost (slowest) factor.

/// Transposition of one tensor factor. Involutive and trace preserving.
ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                std::span<const Index> dims,
                                std::size_t subsystem);

/// Trace over one tensor factor; returns the reduced matrix on the
/// remaining factors.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const Index> dims,
                            std::size_t subsystem);

struct PeresResult {
    bool is_ppt = false;
    double min_eigenvalue = 0.0;
};

/// Positivity of the partial transpose over the second factor of a
/// bipartite state.
PeresResult peres_test(const DensityMatrix& rho);

struct XStateResult {
    bool cond1 = false;  // R11 R22 >= |rho12|^2
    bool cond2 = false;  // rho11 rho22 >= |R12|^2
    double margin1 = 0.0;
    double margin2 = 0.0;
};

/// Closed-form separability inequalities for 4x4 X-form states (corner block
/// R, inner block rho). Throws if the matrix is not of X form.
XStateResult x_state_check(const ComplexMatrix& rho, double pattern_tol = 1e-12);

/// Convex combination sum_s p_s (L_s^(1) (x) ... (x) L_s^(N)) of per-subsystem
/// superoperators.
struct SubsystemMapTerm {
    double weight = 1.0;
    std::vector<Superoperator> factors;  // one per subsystem, leftmost first
};

struct SubsystemMapEnsemble {
    std::vector<SubsystemMapTerm> terms;
};

SubsystemMapEnsemble identity_ensemble(std::span<const Index> dims);

/// Single-term ensemble applying `map` to one subsystem and identity to the
/// rest.
SubsystemMapEnsemble single_subsystem_ensemble(std::span<const Index> dims,
                                               std::size_t subsystem,
                                               Superoperator map);

/// Assembles the composite superoperator so that its action on vec(rho)
/// applies each factor map to its own tensor slot.
Superoperator ensemble_superop(const SubsystemMapEnsemble& ensemble,
                               std::span<const Index> dims);

/// Entanglement witness F(g, L) = sum_m |<m| g^dag rho_L g |m>| where
/// rho_L = unvec(L vec(rho)). Equals 1 for every state under the identity
/// ensemble; exceeds 1 only when rho_L fails positivity.
double witness_F(const DensityMatrix& rho, const SubsystemMapEnsemble& ensemble,
                 const ComplexMatrix& g);

/// Same witness evaluated on an already transformed Hermitian matrix.
double witness_F_transformed(const ComplexMatrix& rho_l,
                             std::span<const Index> dims,
                             const ComplexMatrix& g);

struct ScanConfig {
    std::size_t eps_points = 41;
    std::size_t g_samples = 0;   // extra Haar evaluations per map parameter
    std::uint64_t seed = 1;
    double threshold = 1e-9;     // entangled iff f_max > 1 + threshold
    std::size_t subsystem = 0;   // 1-based; 0 selects the last subsystem
    ExecPolicy policy = ExecPolicy::Parallel;
};

struct WitnessResult {
    double f_max = 0.0;
    ComplexMatrix argmax_g;
    double argmax_eps = 0.0;      // NaN when scanning an explicit family
    std::size_t argmax_index = 0; // grid / family index of the maximum
    std::size_t samples_used = 0;
    bool entangled = false;
};

/// Grid of probe parameters spanning [-1, 1/(d-1)], the range on which the
/// depolarizing map of a d-dimensional subsystem is positive.
std::vector<double> depolarizing_grid(Index subsystem_dim, std::size_t points);

/// Scans the depolarizing probe family on one subsystem. For each parameter
/// the witness is evaluated at the eigenvector matrix of rho_L, which attains
/// max_g F (the trace norm of rho_L), plus optional Haar samples that realize
/// the tomographic interpretation. The search over g is therefore exact.
WitnessResult witness_scan(const DensityMatrix& rho, const ScanConfig& cfg = {});

/// Scans an explicit family of map ensembles.
WitnessResult witness_scan(const DensityMatrix& rho,
                           std::span<const SubsystemMapEnsemble> family,
                           const ScanConfig& cfg = {});

/// Two-qubit Werner state with corner weights (1 +/- p)/4 and cross term p/2.
/// PSD requires p in [-1/3, 1].
DensityMatrix werner_state(double p);

/// (1 + mu1 s1(x)s1 + mu2 s2(x)s2 + mu3 s3(x)s3)/4; eigenvalues are the four
/// combinations (1 -/+ mu1 -/+ mu2 -/+ mu3)/4 with an odd number of minus
/// signs. Throws outside the state tetrahedron.
DensityMatrix generalized_werner(double mu1, double mu2, double mu3);

enum class QutritPairKind { ThreeTerm, TwoTerm };

/// Rank-one two-qutrit states: equal superposition of three resp. two
/// computational product states.
DensityMatrix qutrit_pair(QutritPairKind kind);

/// Applies the depolarizing probe with parameter eps[k] to subsystem k+1.
ComplexMatrix multipartite_depolarize(const DensityMatrix& rho,
                                      std::span<const double> eps);

/// Anti-diagonal Bell-basis unitary (corner Hadamard block, identity middle)
/// whose tomogram of any two-qubit Werner-family matrix lists its eigenvalues;
/// the named group element of the Werner closed-form reproduction.
ComplexMatrix werner_g0();

}  // namespace qtom

#endif
