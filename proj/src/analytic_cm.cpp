#include "su11/analytic_cm.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

bool is_odd(int k) { return (k % 2) != 0; }

Complex phase(double angle) { return std::exp(Complex(0.0, angle)); }

void set_sym(CMatrix& m, int k, int l, Complex value) {
    m(k - 1, l - 1) = value;
    m(l - 1, k - 1) = value;
}

void set_herm(CMatrix& m, int k, int l, Complex value) {
    m(k - 1, l - 1) = value;
    m(l - 1, k - 1) = std::conj(value);
}

GaussianState from_blocks(CMatrix a, CMatrix b) {
    const auto m = a.rows();
    return GaussianState(std::move(a), std::move(b), CVector::Zero(2 * m));
}

GaussianState su11_state(int m, const InterferometerParams& p) {
    const double mu2 = p.mu2(), nu2 = p.nu2(), v1 = p.v1(), v2 = p.v2();
    const double c1 = p.c1(), c2 = p.c2();
    const Complex eit = phase(p.theta);
    const Complex ei2t = phase(2.0 * p.theta);

    CMatrix a = CMatrix::Zero(m, m);
    CMatrix b = CMatrix::Zero(m, m);

    if (m == 2) {
        // Single second-stage squeezer: a plain two-mode squeezed vacuum.
        a(0, 0) = v2;
        a(1, 1) = v2;
        set_sym(b, 1, 2, 2.0 * c2 * eit);
        return from_blocks(std::move(a), std::move(b));
    }

    const double head1 = v1 * nu2 * nu2 + mu2 * mu2;
    const double head2 = v1 * mu2 * mu2 + nu2 * nu2;

    if (is_odd(m)) {
        a(0, 0) = head1;
        a(1, 1) = head2;
        for (int k = 3; k <= m - 1; ++k) {
            a(k - 1, k - 1) = v1 * v2;
        }
        a(m - 1, m - 1) = v1;

        // Next-slot correlations: the interior value 2 c1 c2 e^{+-i theta}
        // degrades to 2 c1 nu2 e^{i theta} at the tail, where mode M only
        // ever passed the first-stage squeezer.
        for (int k = 1; k <= m - 3; ++k) {
            set_herm(a, k, k + 2, 2.0 * c1 * c2 * (is_odd(k) ? eit : std::conj(eit)));
        }
        set_herm(a, m - 2, m, 2.0 * c1 * nu2 * eit);

        set_sym(b, 1, 2, c2 * (v1 + 1.0) * eit);
        for (int k = 2; k <= m - 2; ++k) {
            set_sym(b, k, k + 1,
                    is_odd(k) ? Complex(2.0 * v1 * c2) * eit : Complex(2.0 * c1 * mu2 * mu2));
        }
        set_sym(b, m - 1, m, 2.0 * c1 * mu2);
        for (int k = 1; k <= m - 3; ++k) {
            if (is_odd(k)) {
                set_sym(b, k, k + 3, 2.0 * c1 * nu2 * nu2 * ei2t);
            }
        }
    } else {
        a(0, 0) = head1;
        a(m - 1, m - 1) = head1;
        a(1, 1) = head2;
        a(m - 2, m - 2) = head2;
        for (int k = 3; k <= m - 2; ++k) {
            a(k - 1, k - 1) = v1 * v2;
        }

        for (int k = 1; k <= m - 2; ++k) {
            set_herm(a, k, k + 2, 2.0 * c1 * c2 * (is_odd(k) ? eit : std::conj(eit)));
        }

        set_sym(b, 1, 2, c2 * (v1 + 1.0) * eit);
        set_sym(b, m - 1, m, c2 * (v1 + 1.0) * eit);
        for (int k = 2; k <= m - 2; ++k) {
            set_sym(b, k, k + 1,
                    is_odd(k) ? Complex(2.0 * v1 * c2) * eit : Complex(2.0 * c1 * mu2 * mu2));
        }
        for (int k = 1; k <= m - 3; ++k) {
            if (is_odd(k)) {
                set_sym(b, k, k + 3, 2.0 * c1 * nu2 * nu2 * ei2t);
            }
        }
    }
    return from_blocks(std::move(a), std::move(b));
}

GaussianState su11_sub_state(int m, const InterferometerParams& p) {
    const double mu2 = p.mu2(), nu2 = p.nu2(), v1 = p.v1(), v2 = p.v2();
    const double c1 = p.c1(), c2 = p.c2();
    const Complex eit = phase(p.theta);
    const Complex ei2t = phase(2.0 * p.theta);

    CMatrix a = CMatrix::Zero(m, m);
    CMatrix b = CMatrix::Zero(m, m);

    if (m == 2) {
        a(0, 0) = v1 * v2;
        a(1, 1) = v1 * v2;
        set_sym(b, 1, 2, 2.0 * v1 * c2 * eit);
        return from_blocks(std::move(a), std::move(b));
    }
    if (m == 3) {
        a.diagonal().setConstant(v1 * v2);
        set_herm(a, 1, 3, 2.0 * c1 * c2 * eit);
        set_sym(b, 1, 2, 2.0 * v1 * c2 * eit);
        set_sym(b, 2, 3, 2.0 * c1 * mu2 * mu2);
        return from_blocks(std::move(a), std::move(b));
    }

    a.diagonal().setConstant(v1 * v2);
    for (int k = 1; k <= m - 2; ++k) {
        set_herm(a, k, k + 2, 2.0 * c1 * c2 * (is_odd(k) ? eit : std::conj(eit)));
    }
    for (int k = 1; k <= m - 1; ++k) {
        set_sym(b, k, k + 1,
                is_odd(k) ? Complex(2.0 * v1 * c2) * eit : Complex(2.0 * c1 * mu2 * mu2));
    }
    for (int k = 1; k <= m - 3; ++k) {
        if (is_odd(k)) {
            set_sym(b, k, k + 3, 2.0 * c1 * nu2 * nu2 * ei2t);
        }
    }
    return from_blocks(std::move(a), std::move(b));
}

GaussianState bs_state(int m, const InterferometerParams& p) {
    const double v1 = p.v1(), c1 = p.c1();
    const Complex eip = phase(p.phi);
    const double edge = 0.5 * (v1 + 1.0);
    const double cross = 0.5 * (1.0 - v1);

    CMatrix a = CMatrix::Zero(m, m);
    CMatrix b = CMatrix::Zero(m, m);

    if (m == 2) {
        // One splitter on vacuum does nothing.
        a.setIdentity();
        return from_blocks(std::move(a), std::move(b));
    }
    if (m == 3) {
        a.diagonal() << edge, edge, v1;
        set_herm(a, 1, 2, cross);
        set_sym(b, 1, 3, -std::sqrt(2.0) * c1);
        set_sym(b, 2, 3, std::sqrt(2.0) * c1);
        return from_blocks(std::move(a), std::move(b));
    }

    if (is_odd(m)) {
        a.diagonal().setConstant(v1);
        a(0, 0) = edge;
        a(1, 1) = edge;
        set_herm(a, 1, 2, cross);

        for (int k = 1; k <= m - 2; ++k) {
            if (!is_odd(k)) {
                set_sym(b, k, k + 1, c1 * eip);
            }
        }
        set_sym(b, m - 1, m, std::sqrt(2.0) * c1);
        for (int k = 1; k <= m - 3; ++k) {
            set_sym(b, k, k + 2, (is_odd(k) ? -c1 : c1) * eip);
        }
        set_sym(b, m - 2, m, -std::sqrt(2.0) * c1);
        for (int k = 1; k <= m - 3; ++k) {
            if (is_odd(k)) {
                set_sym(b, k, k + 3, -c1 * eip);
            }
        }
    } else {
        a.diagonal().setConstant(v1);
        a(0, 0) = edge;
        a(1, 1) = edge;
        a(m - 2, m - 2) = edge;
        a(m - 1, m - 1) = edge;
        set_herm(a, 1, 2, cross);
        set_herm(a, m - 1, m, -cross);

        for (int k = 1; k <= m - 1; ++k) {
            if (!is_odd(k)) {
                set_sym(b, k, k + 1, c1 * eip);
            }
        }
        for (int k = 1; k <= m - 2; ++k) {
            set_sym(b, k, k + 2, (is_odd(k) ? -c1 : c1) * eip);
        }
        for (int k = 1; k <= m - 3; ++k) {
            if (is_odd(k)) {
                set_sym(b, k, k + 3, -c1 * eip);
            }
        }
    }
    return from_blocks(std::move(a), std::move(b));
}

GaussianState bs_sub_state(int m, const InterferometerParams& p) {
    const double v1 = p.v1(), c1 = p.c1();
    const Complex eip = phase(p.phi);

    CMatrix a = CMatrix::Zero(m, m);
    CMatrix b = CMatrix::Zero(m, m);
    a.diagonal().setConstant(v1);

    if (m == 2) {
        return from_blocks(std::move(a), std::move(b));
    }
    if (m == 3) {
        set_sym(b, 1, 3, -c1 * eip);
        set_sym(b, 2, 3, c1 * eip);
        return from_blocks(std::move(a), std::move(b));
    }

    for (int k = 1; k <= m - 1; ++k) {
        if (!is_odd(k)) {
            set_sym(b, k, k + 1, c1 * eip);
        }
    }
    for (int k = 1; k <= m - 2; ++k) {
        set_sym(b, k, k + 2, (is_odd(k) ? -c1 : c1) * eip);
    }
    for (int k = 1; k <= m - 3; ++k) {
        if (is_odd(k)) {
            set_sym(b, k, k + 3, -c1 * eip);
        }
    }
    return from_blocks(std::move(a), std::move(b));
}

}  // namespace

StateFamily to_state_family(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::kSu11:
            return StateFamily::kSu11;
        case FamilyTag::kSu11Sub:
            return StateFamily::kSu11Sub;
        case FamilyTag::kBs:
            return StateFamily::kBs;
        case FamilyTag::kBsSub:
            return StateFamily::kBsSub;
    }
    throw std::invalid_argument("unknown family tag");
}

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::kSu11:
            return "su11";
        case FamilyTag::kSu11Sub:
            return "su11-sub";
        case FamilyTag::kBs:
            return "bs";
        case FamilyTag::kBsSub:
            return "bs-sub";
    }
    return "?";
}

GaussianState analytic_state(FamilyTag tag, int mode_count, const InterferometerParams& params) {
    if (mode_count < 2) {
        throw std::invalid_argument("closed-form covariances require M >= 2");
    }
    switch (tag) {
        case FamilyTag::kSu11:
            return su11_state(mode_count, params);
        case FamilyTag::kSu11Sub:
            return su11_sub_state(mode_count, params);
        case FamilyTag::kBs:
            return bs_state(mode_count, params);
        case FamilyTag::kBsSub:
            return bs_sub_state(mode_count, params);
    }
    throw std::invalid_argument("unknown family tag");
}

double crosscheck(FamilyTag tag, int mode_count, const InterferometerParams& params) {
    const GaussianState analytic = analytic_state(tag, mode_count, params);
    const GaussianState built = build_family_state(to_state_family(tag), mode_count, params);
    return analytic.max_abs_difference(built);
}

}  // namespace su11
