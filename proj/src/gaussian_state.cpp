#include "su11/gaussian_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace su11 {

namespace {

double max_abs(const CMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

void check_mode_pair(int mode_count, int i, int j) {
    if (mode_count < 2) {
        throw std::invalid_argument("mode pair operation needs at least 2 modes");
    }
    if (i < 1 || j < 1 || i > mode_count || j > mode_count || i == j) {
        throw std::invalid_argument("invalid mode pair (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") for M=" + std::to_string(mode_count));
    }
    if (i > j) {
        throw std::invalid_argument("mode pair must be ordered i < j");
    }
}

}  // namespace

GaussianState::GaussianState(CMatrix block_a, CMatrix block_b, CVector displacement)
    : block_a_(std::move(block_a)), block_b_(std::move(block_b)),
      displacement_(std::move(displacement)) {
    const auto m = block_a_.rows();
    if (m < 1 || block_a_.cols() != m || block_b_.rows() != m || block_b_.cols() != m) {
        throw std::invalid_argument("covariance blocks must be square and of equal size");
    }
    if (displacement_.size() != 2 * m) {
        throw std::invalid_argument("displacement must have length 2M");
    }
    if (max_abs(block_a_ - block_a_.adjoint()) > kStructureTol) {
        throw std::invalid_argument("A block is not Hermitian");
    }
    if (max_abs(block_b_ - block_b_.transpose()) > kStructureTol) {
        throw std::invalid_argument("B block is not symmetric");
    }
}

GaussianState GaussianState::vacuum(int mode_count) {
    if (mode_count < 1) {
        throw std::invalid_argument("mode count must be positive");
    }
    return GaussianState(CMatrix::Identity(mode_count, mode_count),
                         CMatrix::Zero(mode_count, mode_count),
                         CVector::Zero(2 * mode_count));
}

CMatrix GaussianState::full_covariance() const {
    const int m = mode_count();
    CMatrix sigma(2 * m, 2 * m);
    sigma.topLeftCorner(m, m) = block_a_;
    sigma.topRightCorner(m, m) = block_b_;
    sigma.bottomLeftCorner(m, m) = block_b_.conjugate();
    sigma.bottomRightCorner(m, m) = block_a_.conjugate();
    return sigma;
}

double GaussianState::max_abs_difference(const GaussianState& other) const {
    if (other.mode_count() != mode_count()) {
        throw std::invalid_argument("mode count mismatch");
    }
    double dev = max_abs(block_a_ - other.block_a_);
    dev = std::max(dev, max_abs(block_b_ - other.block_b_));
    dev = std::max(dev, (displacement_ - other.displacement_).cwiseAbs().maxCoeff());
    return dev;
}

SymplecticOp::SymplecticOp(CMatrix block_sa, CMatrix block_sb)
    : block_sa_(std::move(block_sa)), block_sb_(std::move(block_sb)) {
    const auto m = block_sa_.rows();
    if (m < 1 || block_sa_.cols() != m || block_sb_.rows() != m || block_sb_.cols() != m) {
        throw std::invalid_argument("evolution blocks must be square and of equal size");
    }
    if (symplectic_residual() > kStructureTol) {
        throw std::invalid_argument("blocks do not form a Bogoliubov transformation");
    }
}

CMatrix SymplecticOp::full() const {
    const int m = mode_count();
    CMatrix s(2 * m, 2 * m);
    s.topLeftCorner(m, m) = block_sa_;
    s.topRightCorner(m, m) = block_sb_;
    s.bottomLeftCorner(m, m) = block_sb_.conjugate();
    s.bottomRightCorner(m, m) = block_sa_.conjugate();
    return s;
}

SymplecticOp SymplecticOp::inverse() const {
    // From S K S^+ = K: S^{-1} = K S^+ K, which in block form is
    // S_A -> S_A^+ and S_B -> -S_B^T.
    return SymplecticOp(block_sa_.adjoint(), -block_sb_.transpose());
}

double SymplecticOp::symplectic_residual() const {
    const int m = mode_count();
    // S K S^+ - K restricted to its independent blocks:
    //   top-left:  S_A S_A^+ - S_B S_B^+ - I
    //   top-right: S_B S_A^T - S_A S_B^T
    const CMatrix tl =
        block_sa_ * block_sa_.adjoint() - block_sb_ * block_sb_.adjoint() - CMatrix::Identity(m, m);
    const CMatrix tr = block_sb_ * block_sa_.transpose() - block_sa_ * block_sb_.transpose();
    return std::max(max_abs(tl), max_abs(tr));
}

SymplecticOp tmsq_matrix(int mode_count, int i, int j, double r, double theta) {
    check_mode_pair(mode_count, i, j);
    if (r < 0.0) {
        throw std::invalid_argument("squeezing amplitude must be >= 0");
    }
    CMatrix sa = CMatrix::Identity(mode_count, mode_count);
    CMatrix sb = CMatrix::Zero(mode_count, mode_count);
    const double mu = std::cosh(r);
    const Complex nu = std::sinh(r) * std::exp(Complex(0.0, theta));
    sa(i - 1, i - 1) = mu;
    sa(j - 1, j - 1) = mu;
    sb(i - 1, j - 1) = nu;
    sb(j - 1, i - 1) = nu;
    return SymplecticOp(std::move(sa), std::move(sb));
}

SymplecticOp bs_matrix(int mode_count, int i, int j, double phi) {
    check_mode_pair(mode_count, i, j);
    CMatrix sa = CMatrix::Identity(mode_count, mode_count);
    CMatrix sb = CMatrix::Zero(mode_count, mode_count);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex phase = std::exp(Complex(0.0, phi));
    sa(i - 1, i - 1) = phase * inv_sqrt2;
    sa(i - 1, j - 1) = -inv_sqrt2;
    sa(j - 1, i - 1) = phase * inv_sqrt2;
    sa(j - 1, j - 1) = inv_sqrt2;
    return SymplecticOp(std::move(sa), std::move(sb));
}

GaussianState apply(const SymplecticOp& op, const GaussianState& state) {
    const int m = state.mode_count();
    if (op.mode_count() != m) {
        throw std::invalid_argument("operator and state mode counts differ");
    }
    const CMatrix& sa = op.block_sa();
    const CMatrix& sb = op.block_sb();
    const CMatrix& a = state.block_a();
    const CMatrix& b = state.block_b();

    // sigma' = S sigma S^+ evaluated blockwise; only the top row of blocks
    // is needed since the bottom row is its conjugate.
    const CMatrix t1 = sa * a + sb * b.conjugate();   // S sigma, block (1,1)
    const CMatrix t2 = sa * b + sb * a.conjugate();   // S sigma, block (1,2)
    CMatrix a_new = t1 * sa.adjoint() + t2 * sb.adjoint();
    CMatrix b_new = t1 * sb.transpose() + t2 * sa.transpose();

    a_new = 0.5 * (a_new + a_new.adjoint()).eval();
    b_new = 0.5 * (b_new + b_new.transpose()).eval();

    CVector d_new(2 * m);
    d_new.head(m) = sa * state.displacement().head(m) + sb * state.displacement().tail(m);
    d_new.tail(m) = sb.conjugate() * state.displacement().head(m) +
                    sa.conjugate() * state.displacement().tail(m);
    return GaussianState(std::move(a_new), std::move(b_new), std::move(d_new));
}

GaussianState partial_trace(const GaussianState& state, const std::vector<int>& keep) {
    const int m = state.mode_count();
    if (keep.empty()) {
        throw std::invalid_argument("keep list must not be empty");
    }
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 1 || keep[k] > m) {
            throw std::invalid_argument("keep index out of range");
        }
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw std::invalid_argument("keep list must be strictly increasing");
        }
    }
    const int n = static_cast<int>(keep.size());
    CMatrix a(n, n);
    CMatrix b(n, n);
    CVector d(2 * n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            a(p, q) = state.block_a()(keep[p] - 1, keep[q] - 1);
            b(p, q) = state.block_b()(keep[p] - 1, keep[q] - 1);
        }
        d(p) = state.displacement()(keep[p] - 1);
        d(n + p) = state.displacement()(m + keep[p] - 1);
    }
    return GaussianState(std::move(a), std::move(b), std::move(d));
}

QuadratureCM::QuadratureCM(int mode_count, RMatrix matrix)
    : mode_count_(mode_count), matrix_(std::move(matrix)) {
    if (mode_count_ < 1 || matrix_.rows() != 2 * mode_count_ || matrix_.cols() != 2 * mode_count_) {
        throw std::invalid_argument("quadrature CM must be 2M x 2M");
    }
    if ((matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff() > kStructureTol) {
        throw std::invalid_argument("quadrature CM must be symmetric");
    }
}

QuadratureCM to_quadrature(const GaussianState& state) {
    const int m = state.mode_count();
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex iu(0.0, 1.0);
    CMatrix w = CMatrix::Zero(2 * m, 2 * m);
    for (int k = 0; k < m; ++k) {
        w(2 * k, k) = inv_sqrt2;           // X_k = (A_k + A_k^+)/sqrt(2)
        w(2 * k, m + k) = inv_sqrt2;
        w(2 * k + 1, k) = -iu * inv_sqrt2; // P_k = i (A_k^+ - A_k)/sqrt(2)
        w(2 * k + 1, m + k) = iu * inv_sqrt2;
    }
    const CMatrix sigma_q = w * state.full_covariance() * w.adjoint();
    const double imag_residue = sigma_q.imag().cwiseAbs().maxCoeff();
    if (imag_residue > kStructureTol) {
        throw std::runtime_error("quadrature transform left imaginary residue " +
                                 std::to_string(imag_residue));
    }
    RMatrix real_part = sigma_q.real();
    real_part = 0.5 * (real_part + real_part.transpose()).eval();
    return QuadratureCM(m, std::move(real_part));
}

}  // namespace su11
