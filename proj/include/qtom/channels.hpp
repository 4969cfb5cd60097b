/*
 * This code is part of qtom.
 *
 * This code is licensed under the Apache License, Version 2.0. You may obtain
 * a copy of this license in the LICENSE.txt file in the root directory of this
 * source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef QTOM_CHANNELS_HPP
#define QTOM_CHANNELS_HPP

#include <span>
#include <vector>

#include "qtom/linmap.hpp"

namespace qtom {

/// Signed Kraus collection: rho -> sum_k V_k rho V_k^dag - sum_s v_s rho v_s^dag.
/// A nonempty negative part makes the map positive but not completely
/// positive; those are the entanglement probes. The constructor checks the
/// normalization sum V^dag V - sum v^dag v = 1.
class KrausMap {
  public:
    explicit KrausMap(std::vector<ComplexMatrix> positive,
                      std::vector<ComplexMatrix> negative = {},
                      double tol = 1e-10);

    static KrausMap identity(Index n);
    /// Projector decoherence V_k = |k><k|: keeps the diagonal, kills phases.
    static KrausMap decoherence(Index n);
    /// Qubit transpose as the signed Pauli combination
    /// rho -> (rho + s1 rho s1 - s2 rho s2 + s3 rho s3)/2.
    static KrausMap transpose_qubit();
    /// Signed realization of rho -> -eps rho + (1+eps)/n Tr(rho) 1.
    static KrausMap depolarizing_probe(Index n, double eps);

    Index dim() const { return dim_; }
    const std::vector<ComplexMatrix>& positive_part() const { return positive_; }
    const std::vector<ComplexMatrix>& negative_part() const { return negative_; }

  private:
    std::vector<ComplexMatrix> positive_;
    std::vector<ComplexMatrix> negative_;
    Index dim_ = 0;
};

/// Direct application of the signed Kraus sum. The output of a negative-part
/// map may have negative eigenvalues; that is the point of the probe.
ComplexMatrix kraus_apply(const KrausMap& k, const ComplexMatrix& rho);

/// Superoperator matrix sum V (x) V^* - sum v (x) v^*.
Superoperator kraus_superop(const KrausMap& k);

/// Random-unitary channel sum_k p_k U_k (x) U_k^*.
Superoperator random_unitary_mix(std::span<const double> weights,
                                 std::span<const ComplexMatrix> unitaries,
                                 double tol = 1e-10);

/// First and second moments of an averaged 2x2 unitary of the SU(2) form
/// [[alpha, beta], [-beta^*, alpha^*]]:
///   ell = <|alpha|^2>, m = <alpha beta^*>, n = <alpha beta>,
///   s = <alpha^2>, q = <beta^2>.
struct MomentMap {
    double ell = 1.0;
    Complex m{0.0, 0.0};
    Complex n{0.0, 0.0};
    Complex s{1.0, 0.0};
    Complex q{0.0, 0.0};
};

/// The 4x4 averaged-adjoint matrix built from the moments. Throws if a
/// modulus exceeds one or ell is outside [0, 1].
Superoperator build_moment_map(const MomentMap& mm);

/// Closed-form determinant (1-2 ell)(|q|^2-|s|^2) + 4 Re[q^* m^* n + m n s^*].
double moment_determinant(const MomentMap& mm);

/// Checks the block identities D = s2 A^* s2, C = -s2 B^* s2 on a 4x4 matrix.
bool check_block_structure(const ComplexMatrix& mat4, double tol = 1e-10);

/// Depolarizing map rho -> -eps rho + (1+eps)/n Tr(rho) 1. Values of eps
/// outside [-1, 1] are accepted but lie outside the contraction semigroup;
/// probe positivity on states holds only for eps <= 1/(n-1).
Superoperator depolarizing(Index n, double eps);
bool depolarizing_in_semigroup(double eps);
double depolarizing_positive_limit(Index n);

/// Phase damping: diagonal entries fixed, off-diagonal scaled by lambda.
Superoperator phase_damping(Index n, double lambda);

/// Vec-permutation matrix of the transpose map rho -> rho^T.
Superoperator transpose_superop(Index n);

/// Qubit transpose via the signed Pauli combination (agrees with
/// transpose_superop(2) on all inputs).
ComplexMatrix transpose_map_qubit(const ComplexMatrix& rho);

/// Entanglement-breaking map rho -> sum_k r_k Tr(R_k rho); requires
/// sum_k R_k = 1 and PSD effects R_k.
Superoperator entanglement_breaking(std::span<const DensityMatrix> states,
                                    std::span<const ComplexMatrix> effects,
                                    double tol = 1e-10);

/// Complement-decoherence map rho -> (Tr(rho) 1 - diag rho)/n. The raw form
/// has trace (n-1)/n on states; with trace_preserving set the divisor is n-1
/// instead, a deviation from the raw display that restores unit trace.
Superoperator diag_complement(Index n, bool trace_preserving = false);

struct ChannelReport {
    double kappa = 0.0;
    bool trace_preserved = false;
    bool hermiticity_preserved = false;
    double min_output_eigenvalue = 0.0;
};

/// Purity contraction parameter kappa = Tr(L rho)^2 / Tr rho^2, with
/// preservation flags for the output. Non-Hermitian output is flagged,
/// not an error.
ChannelReport contraction_kappa(const Superoperator& l, const DensityMatrix& rho);

/// Matrix product l1 * l2 (apply l2 first). No structure inference.
Superoperator compose(const Superoperator& l1, const Superoperator& l2);

/// Purification: N sum_kj sqrt(p_k p_j) rho_k P0 rho_j / sqrt(Tr rho_k P0 rho_j P0),
/// normalized to unit trace. Output is rank one. Throws (naming the index) if
/// the fiducial projector is orthogonal to one of the states.
DensityMatrix purify(std::span<const double> weights,
                     std::span<const DensityMatrix> states,
                     const ComplexMatrix& fiducial);

/// Mixture with a coherence cross term controlled by kappa in [0, 1]:
/// p1 rho1 + p2 rho2 + kappa sqrt(p1 p2)(rho1 P0 rho2 + rho2 P0 rho1)/sqrt(Tr rho1 P0 rho2 P0).
ComplexMatrix decohered_mixture(double p1, double p2, const DensityMatrix& rho1,
                                const DensityMatrix& rho2, double kappa,
                                const ComplexMatrix& fiducial);

}  // namespace qtom

#endif
