#include "su11/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "su11/analytic_cm.hpp"
#include "su11/entanglement.hpp"
#include "su11/fock_oracle.hpp"
#include "su11/interferometer.hpp"
#include "su11/photon_stats.hpp"
#include "su11/ppt_reference.hpp"

namespace su11 {

namespace {

constexpr FamilyTag kAllFamilies[] = {FamilyTag::kSu11, FamilyTag::kSu11Sub, FamilyTag::kBs,
                                      FamilyTag::kBsSub};

InterferometerParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> amplitude(1e-3, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    InterferometerParams p;
    p.r1 = amplitude(rng);
    p.r2 = amplitude(rng);
    p.theta = angle(rng);
    p.phi = angle(rng);
    return p;
}

SuiteResult crosscheck_suite(const VerifyOptions& options) {
    SuiteResult result{"cm-crosscheck", false, 0.0, 1e-12, ""};
    std::mt19937_64 rng(options.seed);
    const bool corrupt = options.inject_fault == result.name;
    for (FamilyTag tag : kAllFamilies) {
        for (int m = 2; m <= 12; ++m) {
            for (int draw = 0; draw < 50; ++draw) {
                InterferometerParams p = random_params(rng);
                GaussianState analytic = analytic_state(tag, m, p);
                if (corrupt) {
                    CMatrix a = analytic.block_a();
                    a(0, 0) += 1e-6;  // simulated table corruption
                    analytic = GaussianState(std::move(a), analytic.block_b(),
                                             analytic.displacement());
                }
                const GaussianState built = build_family_state(to_state_family(tag), m, p);
                const double dev = analytic.max_abs_difference(built);
                if (dev > result.max_deviation) {
                    result.max_deviation = dev;
                    std::ostringstream where;
                    where << "family=" << family_name(tag) << " M=" << m;
                    result.detail = where.str();
                }
            }
        }
    }
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult photon_identity_suite(const VerifyOptions& options) {
    SuiteResult result{"photon-identities", false, 0.0, 1e-10, ""};
    std::mt19937_64 rng(options.seed + 1);
    const auto track = [&result](double dev, const std::string& what) {
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.detail = what;
        }
    };
    for (int m = 2; m <= 12; ++m) {
        for (int draw = 0; draw < 30; ++draw) {
            const InterferometerParams p = random_params(rng);
            RVector alternating(m);
            for (int k = 0; k < m; ++k) {
                alternating(k) = (k % 2 == 0) ? 1.0 : -1.0;
            }
            track(photon_lc_variance(build_rho(m, p), alternating),
                  "finite-train alternating sum M=" + std::to_string(m));

            const double expected = 2.0 * p.mu1() * p.mu1() * p.nu1() * p.nu1();
            const double got = photon_lc_variance(build_rho_s(m, p), alternating);
            track(std::abs(got - expected) / expected,
                  "steady-train alternating sum M=" + std::to_string(m));

            if (m % 2 == 0) {
                RVector paired(m);
                for (int k = 0; k < m; ++k) {
                    paired(k) = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
                }
                track(photon_lc_variance(build_rho_bs(m, p), paired),
                      "splitter paired-alternating sum M=" + std::to_string(m));
            }

            for (FamilyTag tag : kAllFamilies) {
                const GaussianState state = build_family_state(to_state_family(tag), m, p);
                const PhotonCovariance cov = photon_covariance(state);
                const RMatrix ref_k = reference_photon_covariance(tag, m, p);
                // Entries grow like cosh^8(r); compare relative to scale.
                const double scale = std::max(1.0, ref_k.cwiseAbs().maxCoeff());
                const double mean_dev =
                    (cov.mean - reference_mean_photons(tag, m, p)).cwiseAbs().maxCoeff();
                const double cov_dev = (cov.k - ref_k).cwiseAbs().maxCoeff() / scale;
                track(std::max(mean_dev, cov_dev),
                      std::string("closed-form moments family=") + family_name(tag) +
                          " M=" + std::to_string(m));
            }
        }
    }
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult saturation_suite(const VerifyOptions&) {
    SuiteResult result{"quadrature-saturation", false, 0.0, 1e-3, ""};
    const auto track = [&result](double dev, const std::string& what) {
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.detail = what;
        }
    };
    for (int m = 2; m <= 12; m += 2) {
        InterferometerParams p;
        p.r1 = p.r2 = 4.0;
        const GaussianState state = build_rho_s(m, p);
        RVector wx = RVector::Zero(2 * m);
        RVector wp = RVector::Zero(2 * m);
        for (int k = 0; k < m; ++k) {
            wx(2 * k) = (k % 2 == 0) ? 1.0 : -1.0;
            wp(2 * k + 1) = 1.0;
        }
        const QuadratureCM sigma = to_quadrature(state);
        track(std::abs(quad_lc_variance(sigma, wx) - 0.5),
              "alternating-X variance M=" + std::to_string(m));
        track(std::abs(quad_lc_variance(sigma, wp) - 0.5),
              "summed-P variance M=" + std::to_string(m));
    }
    {
        InterferometerParams p;
        p.r1 = 4.0;
        const GaussianState state = build_rho_bs_s(4, p);
        const QuadratureCM sigma = to_quadrature(state);
        RVector wx = RVector::Zero(8);
        RVector wp = RVector::Zero(8);
        // Vanishing combinations of the splitter-based four-mode unit at
        // phi = 0: X1 - X2 + X3 + X4 and P1 - P2 - P3 - P4.
        wx(0) = 1.0;
        wx(2) = -1.0;
        wx(4) = 1.0;
        wx(6) = 1.0;
        wp(1) = 1.0;
        wp(3) = -1.0;
        wp(5) = -1.0;
        wp(7) = -1.0;
        track(quad_lc_variance(sigma, wx), "splitter X combination");
        track(quad_lc_variance(sigma, wp), "splitter P combination");
    }
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult subsystem_suite(const VerifyOptions& options) {
    SuiteResult result{"subsystem-identity", false, 0.0, 1e-12, ""};
    std::mt19937_64 rng(options.seed + 2);
    for (int m = 2; m <= 10; ++m) {
        const InterferometerParams p = random_params(rng);
        std::vector<int> middle(m);
        for (int k = 0; k < m; ++k) {
            middle[k] = k + 3;
        }
        const double dev =
            build_rho_s(m, p).max_abs_difference(partial_trace(build_rho(m + 4, p), middle));
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.detail = "M=" + std::to_string(m);
        }
    }
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult symplectic_suite(const VerifyOptions& options) {
    SuiteResult result{"symplectic-structure", false, 0.0, 1e-9, ""};
    std::mt19937_64 rng(options.seed + 3);
    std::uniform_int_distribution<int> mode_dist(2, 8);
    const auto track = [&result](double dev, const std::string& what) {
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.detail = what;
        }
    };
    for (int round = 0; round < 20; ++round) {
        const int m = mode_dist(rng);
        const InterferometerParams p = random_params(rng);
        track(tmsq_matrix(m, 1, m, p.r1, p.theta).symplectic_residual(), "squeezer residual");
        track(bs_matrix(m, 1, m, p.phi).symplectic_residual(), "splitter residual");

        const GaussianState state = build_rho(m, p);
        const SymplecticSpectrum spectrum = symplectic_eigenvalues(to_quadrature(state));
        track(std::max(0.0, 1.0 - spectrum.min()), "uncertainty bound M=" + std::to_string(m));

        std::uniform_int_distribution<int> pick(1, m);
        int i = pick(rng), j = pick(rng);
        if (i == j) {
            j = (i % m) + 1;
        }
        const Bipartition bp(m, {std::min(i, j)}, {std::max(i, j)});
        const QuadratureCM sigma = ppt_rearrange(state, bp);
        const QuadratureCM twice = partial_transpose(partial_transpose(sigma, 1, 1), 1, 1);
        track((twice.matrix() - sigma.matrix()).cwiseAbs().maxCoeff(), "transpose involution");
    }
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult fock_suite(const VerifyOptions& options) {
    SuiteResult result{"fock-oracle", false, 0.0, 1e-6, ""};
    std::mt19937_64 rng(options.seed + 4);
    std::uniform_real_distribution<double> amplitude(0.05, 0.3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    const int cutoff = options.full_oracle ? 12 : 10;
    const int max_modes = options.full_oracle ? 4 : 2;
    double max_deficit = 0.0;
    const auto track = [&result](double dev, const std::string& what) {
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.detail = what;
        }
    };
    const StateFamily families[] = {StateFamily::kSu11, StateFamily::kSu11Sub, StateFamily::kBs,
                                    StateFamily::kBsSub};
    for (StateFamily family : families) {
        const bool subsystem = family == StateFamily::kSu11Sub || family == StateFamily::kBsSub;
        const int family_max = subsystem && !options.full_oracle ? 2 : max_modes;
        for (int m = 2; m <= family_max; ++m) {
            InterferometerParams p;
            p.r1 = amplitude(rng);
            p.r2 = amplitude(rng);
            p.theta = angle(rng);
            p.phi = angle(rng);
            const FockFamilyResult fock = fock_family_state(family, m, p, cutoff);
            max_deficit = std::max(max_deficit, fock.state.truncation_deficit());
            const GaussianState expected = build_family_state(family, m, p);
            const std::string label =
                std::string(" family=") + state_family_name(family) + " M=" + std::to_string(m);

            track(fock_family_cm(fock).max_abs_difference(expected), "covariance" + label);
            const PhotonCovariance stats = photon_covariance(expected);
            const PhotonCovariance fock_stats = fock_family_photon_covariance(fock);
            track((fock_stats.mean - stats.mean).cwiseAbs().maxCoeff(), "mean photons" + label);
            track((fock_stats.k - stats.k).cwiseAbs().maxCoeff(), "photon covariance" + label);
        }
    }
    std::ostringstream deficit;
    deficit << "max truncation deficit " << max_deficit
            << (result.detail.empty() ? "" : "; worst: " + result.detail);
    result.detail = deficit.str();
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult enumeration_suite(const VerifyOptions&) {
    SuiteResult result{"enumeration-counts", false, 0.0, 0.5, ""};
    const auto all = enumerate_bipartitions(6, false).size();
    const auto cover = enumerate_bipartitions(6, true).size();
    result.max_deviation = std::abs(static_cast<double>(all) - 301.0) +
                           std::abs(static_cast<double>(cover) - 31.0);
    result.detail = "all=" + std::to_string(all) + " cover=" + std::to_string(cover);
    result.passed = result.max_deviation < result.threshold;
    return result;
}

SuiteResult ppt_reference_suite(const VerifyOptions& options) {
    SuiteResult result{"ppt-reference", false, 0.0, 0.5, ""};
    const ParamGrid grid = ParamGrid::linspace(0.1, 2.0, 20, 0.1, 2.0, 20);
    const auto bipartitions = enumerate_bipartitions(6, false);
    const ScanResult scan =
        scan_bipartitions(StateFamily::kSu11Sub, 6, InterferometerParams{}, bipartitions, grid);
    int mismatches = 0;
    std::string first_mismatch;
    for (std::size_t idx = 0; idx < bipartitions.size(); ++idx) {
        Negativity expected = six_mode_reference_verdict(bipartitions[idx]);
        if (options.inject_fault == result.name && idx == 0) {
            expected = expected == Negativity::kAlways ? Negativity::kNone : Negativity::kAlways;
        }
        if (scan.verdicts[idx].verdict != expected) {
            ++mismatches;
            if (first_mismatch.empty()) {
                first_mismatch = bipartitions[idx].id() + " got " +
                                 negativity_name(scan.verdicts[idx].verdict) + " want " +
                                 negativity_name(expected);
            }
        }
    }
    result.max_deviation = mismatches;
    result.detail = mismatches == 0 ? "301 verdicts match" : first_mismatch;
    result.passed = result.max_deviation < result.threshold;
    return result;
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    return {
        crosscheck_suite(options),      photon_identity_suite(options),
        saturation_suite(options),      subsystem_suite(options),
        symplectic_suite(options),      fock_suite(options),
        enumeration_suite(options),     ppt_reference_suite(options),
    };
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& result : results) {
        if (!result.passed) {
            return false;
        }
    }
    return true;
}

}  // namespace su11
