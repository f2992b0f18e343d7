#include "su11/fock_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace su11 {

namespace {

constexpr double kMaxAmplitudes = 5e6;
constexpr double kMaxDeficit = 1e-6;

long long pow_ll(int base, int exp) {
    long long value = 1;
    for (int k = 0; k < exp; ++k) {
        value *= base;
    }
    return value;
}

long long stride_of(const FockState& state, int mode) {
    return pow_ll(state.cutoff + 1, state.mode_count - mode);
}

void check_pair(const FockState& state, int i, int j) {
    if (i < 1 || j < 1 || i > state.mode_count || j > state.mode_count || i == j) {
        throw std::invalid_argument("invalid mode pair for Fock evolution");
    }
}

/// Single-mode lowering operator on the truncated space: a |n> = sqrt(n) |n-1>.
CMatrix lowering(int dim) {
    CMatrix a = CMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

/// Applies a two-mode operator u (dim^2 x dim^2, pair index n_i * dim + n_j)
/// to modes (i, j) by gathering the pair-subvectors into a matrix, one GEMM,
/// and scattering back.
void apply_two_mode(FockState& state, int i, int j, const CMatrix& u) {
    const int dim = state.cutoff + 1;
    const long long si = stride_of(state, i);
    const long long sj = stride_of(state, j);
    const long long total = state.amplitudes.size();
    const long long outer = total / (static_cast<long long>(dim) * dim);

    CMatrix gathered(dim * dim, outer);
    long long col = 0;
    // Walk all indices whose occupations on modes i and j are zero.
    std::vector<long long> bases;
    bases.reserve(outer);
    {
        std::vector<int> digits(state.mode_count, 0);
        long long index = 0;
        while (true) {
            bases.push_back(index);
            int mode = state.mode_count;
            for (; mode >= 1; --mode) {
                if (mode == i || mode == j) {
                    continue;
                }
                if (digits[mode - 1] + 1 < dim) {
                    ++digits[mode - 1];
                    index += stride_of(state, mode);
                    break;
                }
                index -= static_cast<long long>(digits[mode - 1]) * stride_of(state, mode);
                digits[mode - 1] = 0;
            }
            if (mode == 0) {
                break;
            }
        }
    }
    for (long long base : bases) {
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                gathered(a * dim + b, col) = state.amplitudes(base + a * si + b * sj);
            }
        }
        ++col;
    }
    const CMatrix evolved = u * gathered;
    col = 0;
    for (long long base : bases) {
        for (int a = 0; a < dim; ++a) {
            for (int b = 0; b < dim; ++b) {
                state.amplitudes(base + a * si + b * sj) = evolved(a * dim + b, col);
            }
        }
        ++col;
    }
    if (state.truncation_deficit() > kMaxDeficit) {
        throw std::runtime_error("Fock truncation insufficient: deficit " +
                                 std::to_string(state.truncation_deficit()));
    }
}

void apply_one_mode(FockState& state, int i, const CMatrix& u) {
    const int dim = state.cutoff + 1;
    const long long si = stride_of(state, i);
    const long long total = state.amplitudes.size();
    CVector scratch(dim);
    for (long long block = 0; block < total; block += si * dim) {
        for (long long offset = 0; offset < si; ++offset) {
            const long long base = block + offset;
            for (int n = 0; n < dim; ++n) {
                scratch(n) = state.amplitudes(base + n * si);
            }
            scratch = (u * scratch).eval();
            for (int n = 0; n < dim; ++n) {
                state.amplitudes(base + n * si) = scratch(n);
            }
        }
    }
    if (state.truncation_deficit() > kMaxDeficit) {
        throw std::runtime_error("Fock truncation insufficient: deficit " +
                                 std::to_string(state.truncation_deficit()));
    }
}

/// a_k applied to the state vector.
CVector lowered(const FockState& state, int k) {
    const int dim = state.cutoff + 1;
    const long long sk = stride_of(state, k);
    CVector out = CVector::Zero(state.amplitudes.size());
    const long long total = state.amplitudes.size();
    for (long long idx = 0; idx < total; ++idx) {
        const int n = static_cast<int>((idx / sk) % dim);
        if (n >= 1) {
            out(idx - sk) += std::sqrt(static_cast<double>(n)) * state.amplitudes(idx);
        }
    }
    return out;
}

int occupation(const FockState& state, long long idx, int mode) {
    const int dim = state.cutoff + 1;
    return static_cast<int>((idx / stride_of(state, mode)) % dim);
}

}  // namespace

FockState fock_vacuum(int mode_count, int cutoff) {
    if (mode_count < 1) {
        throw std::invalid_argument("mode count must be positive");
    }
    if (cutoff < 2) {
        throw std::invalid_argument("cutoff must be at least 2");
    }
    const double amplitudes = std::pow(static_cast<double>(cutoff + 1), mode_count);
    if (amplitudes > kMaxAmplitudes) {
        throw std::invalid_argument("truncated space too large: " + std::to_string(amplitudes) +
                                    " amplitudes");
    }
    FockState state;
    state.mode_count = mode_count;
    state.cutoff = cutoff;
    state.amplitudes = CVector::Zero(pow_ll(cutoff + 1, mode_count));
    state.amplitudes(0) = 1.0;
    return state;
}

FockState fock_tmsq(const FockState& state, int i, int j, double r, double theta) {
    check_pair(state, i, j);
    if (r < 0.0) {
        throw std::invalid_argument("squeezing amplitude must be >= 0");
    }
    const int dim = state.cutoff + 1;
    const CMatrix a = lowering(dim);
    const CMatrix id = CMatrix::Identity(dim, dim);
    const CMatrix a_i = Eigen::kroneckerProduct(a, id).eval();
    const CMatrix a_j = Eigen::kroneckerProduct(id, a).eval();
    const Complex xi = r * std::exp(Complex(0.0, theta));
    const CMatrix generator = xi * (a_i.adjoint() * a_j.adjoint()) -
                              std::conj(xi) * (a_i * a_j);
    FockState out = state;
    apply_two_mode(out, i, j, generator.exp());
    return out;
}

FockState fock_bs(const FockState& state, int i, int j, double phi) {
    check_pair(state, i, j);
    const int dim = state.cutoff + 1;

    // Generator X with e^X equal to the 2x2 splitter block, so that the
    // Heisenberg map matches bs_matrix.
    Eigen::Matrix2cd block;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Complex phase = std::exp(Complex(0.0, phi));
    block << phase * inv_sqrt2, -inv_sqrt2, phase * inv_sqrt2, inv_sqrt2;
    const Eigen::Matrix2cd x = block.log();

    const CMatrix a = lowering(dim);
    const CMatrix id = CMatrix::Identity(dim, dim);
    const CMatrix a_i = Eigen::kroneckerProduct(a, id).eval();
    const CMatrix a_j = Eigen::kroneckerProduct(id, a).eval();
    const CMatrix generator = x(0, 0) * (a_i.adjoint() * a_i) + x(0, 1) * (a_i.adjoint() * a_j) +
                              x(1, 0) * (a_j.adjoint() * a_i) + x(1, 1) * (a_j.adjoint() * a_j);
    FockState out = state;
    apply_two_mode(out, i, j, generator.exp());
    return out;
}

FockState fock_displace(const FockState& state, int i, Complex alpha) {
    if (i < 1 || i > state.mode_count) {
        throw std::invalid_argument("invalid mode for displacement");
    }
    const int dim = state.cutoff + 1;
    const CMatrix a = lowering(dim);
    const CMatrix generator = alpha * a.adjoint() - std::conj(alpha) * a;
    FockState out = state;
    apply_one_mode(out, i, generator.exp());
    return out;
}

GaussianState fock_cm(const FockState& state) {
    if (state.truncation_deficit() > kMaxDeficit) {
        throw std::runtime_error("Fock truncation deficit too large for moment extraction");
    }
    const int m = state.mode_count;
    std::vector<CVector> v(m);
    for (int k = 0; k < m; ++k) {
        v[k] = lowered(state, k + 1);
    }
    CVector d(2 * m);
    for (int k = 0; k < m; ++k) {
        d(k) = state.amplitudes.dot(v[k]);
        d(m + k) = std::conj(d(k));
    }
    CMatrix a(m, m);
    CMatrix b(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // A_ij = delta_ij + 2 <a_j^+ a_i> - 2 <a_i><a_j^+>
            a(i, j) = (i == j ? 1.0 : 0.0) + 2.0 * v[j].dot(v[i]) - 2.0 * d(i) * std::conj(d(j));
        }
        for (int j = i; j < m; ++j) {
            FockState lowered_j = state;
            lowered_j.amplitudes = v[j];
            const Complex aiaj = state.amplitudes.dot(lowered(lowered_j, i + 1));
            b(i, j) = 2.0 * aiaj - 2.0 * d(i) * d(j);
            b(j, i) = b(i, j);
        }
    }
    a = 0.5 * (a + a.adjoint()).eval();
    return GaussianState(std::move(a), std::move(b), std::move(d));
}

RVector fock_mean_photons(const FockState& state) {
    const int m = state.mode_count;
    RVector mean = RVector::Zero(m);
    const long long total = state.amplitudes.size();
    for (long long idx = 0; idx < total; ++idx) {
        const double p = std::norm(state.amplitudes(idx));
        if (p == 0.0) {
            continue;
        }
        for (int k = 1; k <= m; ++k) {
            mean(k - 1) += p * occupation(state, idx, k);
        }
    }
    return mean;
}

PhotonCovariance fock_photon_covariance(const FockState& state) {
    const int m = state.mode_count;
    RVector mean = RVector::Zero(m);
    RMatrix second = RMatrix::Zero(m, m);
    const long long total = state.amplitudes.size();
    std::vector<double> occ(m);
    for (long long idx = 0; idx < total; ++idx) {
        const double p = std::norm(state.amplitudes(idx));
        if (p == 0.0) {
            continue;
        }
        for (int k = 1; k <= m; ++k) {
            occ[k - 1] = occupation(state, idx, k);
        }
        for (int i = 0; i < m; ++i) {
            mean(i) += p * occ[i];
            for (int j = 0; j < m; ++j) {
                second(i, j) += p * occ[i] * occ[j];
            }
        }
    }
    RMatrix k = second - mean * mean.transpose();
    return PhotonCovariance{std::move(mean), std::move(k)};
}

FockFamilyResult fock_family_state(StateFamily family, int mode_count,
                                   const InterferometerParams& params, int cutoff) {
    const bool splitter = family == StateFamily::kBs || family == StateFamily::kBsSub;

    if (family == StateFamily::kBalanced) {
        FockState state = fock_vacuum(2, cutoff);
        state = fock_tmsq(state, 1, 2, params.r1, params.theta);
        state = fock_tmsq(state, 1, 2, params.r2, params.theta);
        return FockFamilyResult{std::move(state), {1, 2}};
    }

    const bool subsystem = family == StateFamily::kSu11Sub || family == StateFamily::kBsSub;
    PumpSchedule schedule = splitter ? bs_schedule(subsystem ? mode_count + 4 : mode_count)
                                     : su11_schedule(subsystem ? mode_count + 4 : mode_count);

    std::vector<int> kept;
    int register_size = mode_count;
    if (subsystem) {
        // The outermost squeezers of the extended train act on modes that are
        // traced out and are the last operations touching them, so they drop
        // out of the reduced state. The head pair (1,2) always drops; the
        // tail pair (M+3, M+4) drops only when its step comes last (even M).
        const int lo = 2;
        const int hi = (mode_count % 2 == 0) ? mode_count + 3 : mode_count + 4;
        std::vector<PumpStep> kept_steps;
        for (const auto& step : schedule.steps) {
            if (step.i >= lo && step.j <= hi) {
                kept_steps.push_back({step.kind, step.i - 1, step.j - 1});
            }
        }
        register_size = hi - lo + 1;
        schedule.mode_count = register_size;
        schedule.steps = std::move(kept_steps);
        for (int k = 0; k < mode_count; ++k) {
            kept.push_back(k + 2);  // original modes 3..M+2
        }
    } else {
        for (int k = 1; k <= mode_count; ++k) {
            kept.push_back(k);
        }
    }

    FockState state = fock_vacuum(register_size, cutoff);
    for (const auto& step : schedule.steps) {
        switch (step.kind) {
            case PumpKind::kTmsq1:
                state = fock_tmsq(state, step.i, step.j, params.r1, 0.0);
                break;
            case PumpKind::kTmsq2:
                state = fock_tmsq(state, step.i, step.j, params.r2, params.theta);
                break;
            case PumpKind::kBeamSplit:
                state = fock_bs(state, step.i, step.j, params.phi);
                break;
        }
    }
    return FockFamilyResult{std::move(state), std::move(kept)};
}

GaussianState fock_family_cm(const FockFamilyResult& result) {
    return partial_trace(fock_cm(result.state), result.kept);
}

RVector fock_family_mean_photons(const FockFamilyResult& result) {
    const RVector full = fock_mean_photons(result.state);
    RVector out(result.kept.size());
    for (std::size_t k = 0; k < result.kept.size(); ++k) {
        out(k) = full(result.kept[k] - 1);
    }
    return out;
}

PhotonCovariance fock_family_photon_covariance(const FockFamilyResult& result) {
    const PhotonCovariance full = fock_photon_covariance(result.state);
    const int n = static_cast<int>(result.kept.size());
    RVector mean(n);
    RMatrix k(n, n);
    for (int p = 0; p < n; ++p) {
        mean(p) = full.mean(result.kept[p] - 1);
        for (int q = 0; q < n; ++q) {
            k(p, q) = full.k(result.kept[p] - 1, result.kept[q] - 1);
        }
    }
    return PhotonCovariance{std::move(mean), std::move(k)};
}

}  // namespace su11
