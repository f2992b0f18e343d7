#pragma once

#include "su11/analytic_cm.hpp"
#include "su11/gaussian_state.hpp"

namespace su11 {

/// First and second moments of the per-mode photon numbers.
struct PhotonCovariance {
    RVector mean;  // <N_i>
    RMatrix k;     // K_ij = <N_i N_j> - <N_i><N_j>, symmetric

    int mode_count() const { return static_cast<int>(mean.size()); }
};

/// Mean photon numbers m_i = (A_ii - 1)/2 + |<A_i>|^2.
RVector mean_photons(const GaussianState& state);

/// Photon-number covariance matrix
///   K = 1/4 (A o A* + B o B* - I) + Re[(d* d^T) o A + (d* d^+) o B],
/// with o the Hadamard product and d the mean-field vector <A_i>. The
/// displacement terms vanish for every state built here (vacuum input) but
/// are evaluated so that displaced states are handled correctly.
PhotonCovariance photon_covariance(const GaussianState& state);

/// Variance of sum_k w_k N_k as the quadratic form w K w^T. Results in
/// [-1e-12, 0] are clipped to exactly 0 so that identically-vanishing
/// combinations report as such. Throws on weight-length mismatch.
double photon_lc_variance(const GaussianState& state, const RVector& weights);
double photon_lc_variance(const PhotonCovariance& cov, const RVector& weights);

/// Closed-form mean photon vector and photon covariance of the four state
/// families, evaluated directly from the pump parameters. This is a second
/// code path, independent of the covariance-matrix route, used to
/// cross-validate photon_covariance.
RVector reference_mean_photons(FamilyTag tag, int mode_count, const InterferometerParams& params);
RMatrix reference_photon_covariance(FamilyTag tag, int mode_count,
                                    const InterferometerParams& params);

}  // namespace su11
