#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace su11 {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Tolerance used for the structural invariants of the value types
/// (Hermiticity of A, symmetry of B, symplecticity of evolution matrices).
inline constexpr double kStructureTol = 1e-12;

/// Multi-mode Gaussian state in the complex (ladder-operator) basis.
///
/// The state over M modes is described by the displacement vector
/// d = [<A_1>, ..., <A_M>, <A_1^+>, ..., <A_M^+>] and the covariance matrix
///
///     sigma_c = [[ A, B ], [ conj(B), conj(A) ]],
///
/// where A is Hermitian, B is symmetric, and the vacuum has A = I, B = 0.
/// Modes are numbered 1..M in the public interface.
///
/// Instances are immutable value objects; all operations on them are pure
/// functions, so states can be shared freely across threads.
class GaussianState {
public:
    /// Builds a state from its covariance blocks and displacement.
    /// Throws std::invalid_argument on dimension mismatch or if A is not
    /// Hermitian / B not symmetric within kStructureTol.
    GaussianState(CMatrix block_a, CMatrix block_b, CVector displacement);

    /// M-mode vacuum: A = I, B = 0, d = 0. Throws for M < 1.
    static GaussianState vacuum(int mode_count);

    int mode_count() const { return static_cast<int>(block_a_.rows()); }
    const CMatrix& block_a() const { return block_a_; }
    const CMatrix& block_b() const { return block_b_; }
    const CVector& displacement() const { return displacement_; }

    /// Full 2M x 2M complex-basis covariance matrix.
    CMatrix full_covariance() const;

    /// Largest absolute elementwise difference between the covariance
    /// blocks and displacements of two states over the same mode count.
    double max_abs_difference(const GaussianState& other) const;

private:
    CMatrix block_a_;
    CMatrix block_b_;
    CVector displacement_;
};

/// Gaussian evolution matrix S = [[S_A, S_B], [conj(S_B), conj(S_A)]] acting
/// on the stacked ladder operators [A_1..A_M, A_1^+..A_M^+].
///
/// Every instance satisfies S K S^+ = K with K = diag(I_M, -I_M), i.e. it is
/// a legal Bogoliubov transformation; the constructor enforces this within
/// kStructureTol.
class SymplecticOp {
public:
    SymplecticOp(CMatrix block_sa, CMatrix block_sb);

    int mode_count() const { return static_cast<int>(block_sa_.rows()); }
    const CMatrix& block_sa() const { return block_sa_; }
    const CMatrix& block_sb() const { return block_sb_; }

    /// Full 2M x 2M evolution matrix.
    CMatrix full() const;

    /// Symplectic inverse K S^+ K; exact for any valid op.
    SymplecticOp inverse() const;

    /// Residual ||S K S^+ - K||_max of the Bogoliubov condition.
    double symplectic_residual() const;

private:
    CMatrix block_sa_;
    CMatrix block_sb_;
};

/// Two-mode squeezer of amplitude r >= 0 and angle theta acting on the mode
/// pair (i, j), 1 <= i < j <= M: S_A is the identity with cosh(r) at (i,i)
/// and (j,j); S_B carries sinh(r) e^{i theta} at (i,j) and (j,i).
SymplecticOp tmsq_matrix(int mode_count, int i, int j, double r, double theta);

/// Balanced beam splitter with phase phi on the mode pair (i, j):
/// S_B = 0 and S_A equals the identity except for the 2x2 sub-block
///
///     [ e^{i phi}/sqrt(2)   -1/sqrt(2)      ]
///     [ e^{i phi}/sqrt(2)    1/sqrt(2)      ]
///
/// on rows/columns (i, j). Passive: maps vacuum to vacuum.
SymplecticOp bs_matrix(int mode_count, int i, int j, double phi);

/// Evolves the state: sigma_c -> S sigma_c S^+ and d -> S d. The A block is
/// re-Hermitized and B re-symmetrized after the product to suppress
/// floating-point drift. Throws on mode-count mismatch.
GaussianState apply(const SymplecticOp& op, const GaussianState& state);

/// Marginal state over the kept modes (1-based, strictly increasing). For
/// Gaussian states this is plain sub-block extraction.
GaussianState partial_trace(const GaussianState& state, const std::vector<int>& keep);

/// Real symmetric covariance matrix in the interleaved quadrature basis
/// q = [X_1, P_1, X_2, P_2, ...] with X = (A + A^+)/sqrt(2),
/// P = i (A^+ - A)/sqrt(2). Vacuum maps to the identity matrix; the
/// single-quadrature variance convention is sigma_ii = <q_i^2 + q_i^2> = 2 Var(q_i),
/// so a vacuum quadrature has variance 1/2.
class QuadratureCM {
public:
    QuadratureCM(int mode_count, RMatrix matrix);

    int mode_count() const { return mode_count_; }
    const RMatrix& matrix() const { return matrix_; }

private:
    int mode_count_;
    RMatrix matrix_;
};

/// Basis change from the complex-basis covariance to the interleaved
/// quadrature covariance. Throws std::runtime_error if the transform leaves
/// imaginary residue above kStructureTol.
QuadratureCM to_quadrature(const GaussianState& state);

}  // namespace su11
