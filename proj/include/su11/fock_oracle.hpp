#pragma once

#include "su11/gaussian_state.hpp"
#include "su11/interferometer.hpp"
#include "su11/photon_stats.hpp"

namespace su11 {

/// Brute-force state vector in a truncated Fock space, an independent
/// first-principles check of the covariance-matrix machinery at small mode
/// counts and small squeezing.
///
/// Amplitudes are indexed by occupation tuples (n_1, ..., n_M) with each
/// n_k <= cutoff and mode 1 varying slowest. Evolution never renormalizes;
/// the probability lost past the cutoff is tracked as truncation_deficit
/// and surfaced by the verification report.
struct FockState {
    int mode_count = 0;
    int cutoff = 0;  // largest occupation per mode
    CVector amplitudes;

    double norm_squared() const { return amplitudes.squaredNorm(); }
    double truncation_deficit() const { return 1.0 - norm_squared(); }
};

/// Vacuum |0...0>. Throws if cutoff < 2 or the amplitude count would exceed
/// 5e6 (the practical memory bound for the dense representation).
FockState fock_vacuum(int mode_count, int cutoff);

/// Two-mode squeezer exp(r e^{i theta} a_i^+ a_j^+ - h.c.) on modes (i, j),
/// applied as the dense exponential of the truncated generator. Throws a
/// runtime error once the accumulated truncation deficit exceeds 1e-6.
FockState fock_tmsq(const FockState& state, int i, int j, double r, double theta);

/// Balanced splitter with phase phi on modes (i, j); number conserving, so
/// exact on the truncated space. Matches bs_matrix.
FockState fock_bs(const FockState& state, int i, int j, double phi);

/// Displacement exp(alpha a_i^+ - conj(alpha) a_i) of a single mode; test
/// helper for the displacement terms of the photon statistics.
FockState fock_displace(const FockState& state, int i, Complex alpha);

/// Covariance blocks and displacement estimated from ladder-operator
/// expectations of the state vector. Requires truncation deficit < 1e-6.
GaussianState fock_cm(const FockState& state);

/// Photon-number statistics evaluated directly in the occupation basis.
RVector fock_mean_photons(const FockState& state);
PhotonCovariance fock_photon_covariance(const FockState& state);

/// Runs the pump schedule of the given family in Fock space. The subsystem
/// families are realized on M + 2 modes: the outermost squeezers of the
/// (M+4)-mode train act entirely on modes that get traced out and cannot
/// change the reduced state, so they are dropped and the remaining schedule
/// is shifted onto modes 2..M+1. The reported moments cover exactly the M
/// central modes.
struct FockFamilyResult {
    FockState state;        // full simulated register
    std::vector<int> kept;  // 1-based modes of `state` forming the family state
};

FockFamilyResult fock_family_state(StateFamily family, int mode_count,
                                   const InterferometerParams& params, int cutoff);

/// Moments of the kept modes of a family simulation.
GaussianState fock_family_cm(const FockFamilyResult& result);
RVector fock_family_mean_photons(const FockFamilyResult& result);
PhotonCovariance fock_family_photon_covariance(const FockFamilyResult& result);

}  // namespace su11
