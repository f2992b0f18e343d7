#include "su11/photon_stats.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

RVector mean_photons(const GaussianState& state) {
    const int m = state.mode_count();
    RVector mean(m);
    for (int i = 0; i < m; ++i) {
        const Complex alpha = state.displacement()(i);
        mean(i) = 0.5 * (state.block_a()(i, i).real() - 1.0) + std::norm(alpha);
    }
    return mean;
}

PhotonCovariance photon_covariance(const GaussianState& state) {
    const int m = state.mode_count();
    const CMatrix& a = state.block_a();
    const CMatrix& b = state.block_b();
    RMatrix k(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            const Complex ai = state.displacement()(i);
            const Complex aj = state.displacement()(j);
            double value = 0.25 * (std::norm(a(i, j)) + std::norm(b(i, j)) - (i == j ? 1.0 : 0.0));
            value += (std::conj(ai) * aj * a(i, j)).real();
            value += (std::conj(ai) * std::conj(aj) * b(i, j)).real();
            k(i, j) = value;
        }
    }
    k = 0.5 * (k + k.transpose()).eval();
    return PhotonCovariance{mean_photons(state), std::move(k)};
}

double photon_lc_variance(const PhotonCovariance& cov, const RVector& weights) {
    if (weights.size() != cov.mean.size()) {
        throw std::invalid_argument("weight vector length must equal the mode count");
    }
    double value = weights.dot(cov.k * weights);
    if (value < 0.0 && value >= -1e-12) {
        value = 0.0;
    }
    return value;
}

double photon_lc_variance(const GaussianState& state, const RVector& weights) {
    return photon_lc_variance(photon_covariance(state), weights);
}

namespace {

bool is_odd(int k) { return (k % 2) != 0; }

void set_sym(RMatrix& m, int k, int l, double value) {
    m(k - 1, l - 1) = value;
    m(l - 1, k - 1) = value;
}

RVector su11_mean(int m, const InterferometerParams& p) {
    const double mu1s = p.mu1() * p.mu1();
    const double mu2s = p.mu2() * p.mu2();
    const double nu2s = p.nu2() * p.nu2();
    RVector mean(m);
    if (m == 2) {
        mean.setConstant(nu2s);
        return mean;
    }
    mean(0) = mu1s * nu2s;
    mean(1) = mu1s * mu2s - 1.0;
    if (is_odd(m)) {
        for (int k = 3; k <= m - 1; ++k) {
            mean(k - 1) = 0.5 * (p.v1() * p.v2() - 1.0);
        }
        mean(m - 1) = p.nu1() * p.nu1();
    } else {
        for (int k = 3; k <= m - 2; ++k) {
            mean(k - 1) = 0.5 * (p.v1() * p.v2() - 1.0);
        }
        mean(m - 2) = mu1s * mu2s - 1.0;
        mean(m - 1) = mu1s * nu2s;
    }
    return mean;
}

RMatrix su11_cov(int m, const InterferometerParams& p) {
    const double mu1_4 = std::pow(p.mu1(), 4), mu2_4 = std::pow(p.mu2(), 4);
    const double nu2_4 = std::pow(p.nu2(), 4);
    const double mu1s = p.mu1() * p.mu1(), mu2s = p.mu2() * p.mu2(), nu2s = p.nu2() * p.nu2();
    const double c1s = p.c1() * p.c1(), c2s = p.c2() * p.c2();
    const double v1s = p.v1() * p.v1(), v2s = p.v2() * p.v2();
    // Boundary modes are thermal, so their variance is n(n+1) with
    // n = mu1^2 nu2^2 for the outermost and n = mu1^2 mu2^2 - 1 for the
    // next-to-boundary mode.
    const double head1 = mu1_4 * nu2_4 + mu1s * nu2s;
    const double head2 = mu1_4 * mu2_4 - mu1s * mu2s;
    const double center = 0.25 * (v1s * v2s - 1.0);

    RMatrix k = RMatrix::Zero(m, m);
    if (m == 2) {
        k.setConstant(c2s);
        return k;
    }
    if (is_odd(m)) {
        k(0, 0) = head1;
        k(1, 1) = head2;
        for (int i = 3; i <= m - 1; ++i) {
            k(i - 1, i - 1) = center;
        }
        k(m - 1, m - 1) = c1s;
        set_sym(k, 1, 2, c2s * mu1_4);
        for (int i = 2; i <= m - 2; ++i) {
            set_sym(k, i, i + 1, is_odd(i) ? v1s * c2s : c1s * mu2_4);
        }
        set_sym(k, m - 1, m, c1s * mu2s);  // mode M never saw the second stage
        for (int i = 1; i <= m - 3; ++i) {
            set_sym(k, i, i + 2, c1s * c2s);
        }
        set_sym(k, m - 2, m, c1s * nu2s);
        for (int i = 1; i <= m - 3; ++i) {
            if (is_odd(i)) {
                set_sym(k, i, i + 3, c1s * nu2_4);
            }
        }
    } else {
        k(0, 0) = head1;
        k(m - 1, m - 1) = head1;
        k(1, 1) = head2;
        k(m - 2, m - 2) = head2;
        for (int i = 3; i <= m - 2; ++i) {
            k(i - 1, i - 1) = center;
        }
        set_sym(k, 1, 2, c2s * mu1_4);
        set_sym(k, m - 1, m, c2s * mu1_4);
        for (int i = 2; i <= m - 2; ++i) {
            set_sym(k, i, i + 1, is_odd(i) ? v1s * c2s : c1s * mu2_4);
        }
        for (int i = 1; i <= m - 2; ++i) {
            set_sym(k, i, i + 2, c1s * c2s);
        }
        for (int i = 1; i <= m - 3; ++i) {
            if (is_odd(i)) {
                set_sym(k, i, i + 3, c1s * nu2_4);
            }
        }
    }
    return k;
}

RVector su11_sub_mean(int m, const InterferometerParams& p) {
    return RVector::Constant(m, 0.5 * (p.v1() * p.v2() - 1.0));
}

RMatrix su11_sub_cov(int m, const InterferometerParams& p) {
    const double mu2_4 = std::pow(p.mu2(), 4), nu2_4 = std::pow(p.nu2(), 4);
    const double c1s = p.c1() * p.c1(), c2s = p.c2() * p.c2();
    const double v1s = p.v1() * p.v1(), v2s = p.v2() * p.v2();

    RMatrix k = RMatrix::Zero(m, m);
    k.diagonal().setConstant(0.25 * (v1s * v2s - 1.0));
    for (int i = 1; i <= m - 1; ++i) {
        set_sym(k, i, i + 1, is_odd(i) ? v1s * c2s : c1s * mu2_4);
    }
    for (int i = 1; i <= m - 2; ++i) {
        set_sym(k, i, i + 2, c1s * c2s);
    }
    for (int i = 1; i <= m - 3; ++i) {
        if (is_odd(i)) {
            set_sym(k, i, i + 3, c1s * nu2_4);
        }
    }
    return k;
}

RVector bs_mean(int m, const InterferometerParams& p) {
    const double nu1s = p.nu1() * p.nu1();
    RVector mean(m);
    if (m == 2) {
        mean.setZero();
        return mean;
    }
    mean.setConstant(nu1s);
    mean(0) = 0.5 * nu1s;
    mean(1) = 0.5 * nu1s;
    if (!is_odd(m)) {
        mean(m - 2) = 0.5 * nu1s;
        mean(m - 1) = 0.5 * nu1s;
    }
    return mean;
}

RMatrix bs_cov(int m, const InterferometerParams& p) {
    const double mu1_4 = std::pow(p.mu1(), 4), nu1_4 = std::pow(p.nu1(), 4);
    const double edge = 0.25 * (mu1_4 - 1.0);
    const double bulk = 0.5 * (mu1_4 + nu1_4 - 1.0);

    RMatrix k = RMatrix::Zero(m, m);
    if (m == 2) {
        return k;
    }
    if (is_odd(m)) {
        k.diagonal().setConstant(bulk);
        k(0, 0) = edge;
        k(1, 1) = edge;
        set_sym(k, 1, 2, 0.25 * nu1_4);
        for (int i = 2; i <= m - 2; ++i) {
            if (!is_odd(i)) {
                set_sym(k, i, i + 1, 0.25 * bulk);
            }
        }
        set_sym(k, m - 1, m, 0.5 * bulk);
        for (int i = 1; i <= m - 3; ++i) {
            set_sym(k, i, i + 2, 0.25 * bulk);
        }
        set_sym(k, m - 2, m, 0.5 * bulk);
        for (int i = 1; i <= m - 3; ++i) {
            if (is_odd(i)) {
                set_sym(k, i, i + 3, 0.25 * bulk);
            }
        }
    } else {
        k.diagonal().setConstant(bulk);
        k(0, 0) = edge;
        k(1, 1) = edge;
        k(m - 2, m - 2) = edge;
        k(m - 1, m - 1) = edge;
        set_sym(k, 1, 2, 0.25 * nu1_4);
        set_sym(k, m - 1, m, 0.25 * nu1_4);
        for (int i = 2; i <= m - 2; ++i) {
            if (!is_odd(i)) {
                set_sym(k, i, i + 1, 0.25 * bulk);
            }
        }
        for (int i = 1; i <= m - 2; ++i) {
            set_sym(k, i, i + 2, 0.25 * bulk);
        }
        for (int i = 1; i <= m - 3; ++i) {
            if (is_odd(i)) {
                set_sym(k, i, i + 3, 0.25 * bulk);
            }
        }
    }
    return k;
}

RVector bs_sub_mean(int m, const InterferometerParams& p) {
    return RVector::Constant(m, p.nu1() * p.nu1());
}

RMatrix bs_sub_cov(int m, const InterferometerParams& p) {
    const double mu1_4 = std::pow(p.mu1(), 4), nu1_4 = std::pow(p.nu1(), 4);
    const double bulk = 0.5 * (mu1_4 + nu1_4 - 1.0);

    RMatrix k = RMatrix::Zero(m, m);
    k.diagonal().setConstant(bulk);
    for (int i = 1; i <= m - 1; ++i) {
        if (!is_odd(i)) {
            set_sym(k, i, i + 1, 0.25 * bulk);
        }
    }
    for (int i = 1; i <= m - 2; ++i) {
        set_sym(k, i, i + 2, 0.25 * bulk);
    }
    for (int i = 1; i <= m - 3; ++i) {
        if (is_odd(i)) {
            set_sym(k, i, i + 3, 0.25 * bulk);
        }
    }
    return k;
}

}  // namespace

RVector reference_mean_photons(FamilyTag tag, int mode_count, const InterferometerParams& params) {
    if (mode_count < 2) {
        throw std::invalid_argument("families require M >= 2");
    }
    switch (tag) {
        case FamilyTag::kSu11:
            return su11_mean(mode_count, params);
        case FamilyTag::kSu11Sub:
            return su11_sub_mean(mode_count, params);
        case FamilyTag::kBs:
            return bs_mean(mode_count, params);
        case FamilyTag::kBsSub:
            return bs_sub_mean(mode_count, params);
    }
    throw std::invalid_argument("unknown family tag");
}

RMatrix reference_photon_covariance(FamilyTag tag, int mode_count,
                                    const InterferometerParams& params) {
    if (mode_count < 2) {
        throw std::invalid_argument("families require M >= 2");
    }
    switch (tag) {
        case FamilyTag::kSu11:
            return su11_cov(mode_count, params);
        case FamilyTag::kSu11Sub:
            return su11_sub_cov(mode_count, params);
        case FamilyTag::kBs:
            return bs_cov(mode_count, params);
        case FamilyTag::kBsSub:
            return bs_sub_cov(mode_count, params);
    }
    throw std::invalid_argument("unknown family tag");
}

}  // namespace su11
