#pragma once

#include <vector>

#include "su11/gaussian_state.hpp"

namespace su11 {

/// Pump parameters of the two-stage interferometer. OPA1 squeezes with
/// amplitude r1 and sets the phase reference (its squeezing angle is zero);
/// theta is the squeezing angle of the second stage relative to it, and phi
/// the phase of the balanced splitter used by the splitter-based variant.
struct InterferometerParams {
    double r1 = 0.0;
    double r2 = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    double mu1() const { return std::cosh(r1); }
    double nu1() const { return std::sinh(r1); }
    double mu2() const { return std::cosh(r2); }
    double nu2() const { return std::sinh(r2); }
    double v1() const { return mu1() * mu1() + nu1() * nu1(); }
    double v2() const { return mu2() * mu2() + nu2() * nu2(); }
    double c1() const { return mu1() * nu1(); }
    double c2() const { return mu2() * nu2(); }
};

/// Which stage a pump step belongs to. Tmsq1/Tmsq2 are two-mode squeezers
/// driven by the first and second pump train; BeamSplit replaces the second
/// stage in the splitter-based scheme.
enum class PumpKind { kTmsq1, kTmsq2, kBeamSplit };

struct PumpStep {
    PumpKind kind;
    int i;  // 1-based mode pair, i < j
    int j;

    friend bool operator==(const PumpStep&, const PumpStep&) = default;
};

/// Ordered pump sequence generating an M-mode state from vacuum.
/// Always holds M-1 steps, ordered so that steps in a later timing slot come
/// later and, for every signal mode, its first-stage squeezer precedes its
/// second-stage partner.
struct PumpSchedule {
    int mode_count = 0;
    std::vector<PumpStep> steps;
};

enum class Channel { kSignal, kIdler };

/// Integer label of the (channel, timing slot) mode: idler of slot t is
/// 2t - 1, signal of slot t is 2t. Throws for t < 1.
int mode_index(Channel channel, int t);

/// Pump schedule of the delayed two-stage scheme for M >= 2 modes.
/// For M = 8 this is the sequence Tmsq1(2,3), Tmsq2(1,2), Tmsq1(4,5),
/// Tmsq2(3,4), Tmsq1(6,7), Tmsq2(5,6), Tmsq2(7,8); other M follow the same
/// slot-by-slot pattern (odd M ends with the first-stage squeezer as the
/// last operation touching mode M).
PumpSchedule su11_schedule(int mode_count);

/// Same schedule shape with every second-stage squeezer replaced by a
/// balanced splitter.
PumpSchedule bs_schedule(int mode_count);

/// Folds a schedule over the M-mode vacuum: Tmsq1 steps squeeze with
/// (r1, angle 0), Tmsq2 steps with (r2, theta), BeamSplit steps mix with
/// phase phi.
GaussianState run_schedule(const PumpSchedule& schedule, const InterferometerParams& params);

/// Finite-pump-train state over M modes (M >= 2).
GaussianState build_rho(int mode_count, const InterferometerParams& params);

/// M central modes of the steady-train state, obtained as the middle-M
/// reduction of the (M+4)-mode finite-train state.
GaussianState build_rho_s(int mode_count, const InterferometerParams& params);

/// Splitter-based variants of the two states above: the second stage is a
/// balanced splitter with phase phi. Their covariances depend on r1 and phi
/// only (the first stage carries no angle).
GaussianState build_rho_bs(int mode_count, const InterferometerParams& params);
GaussianState build_rho_bs_s(int mode_count, const InterferometerParams& params);

/// Two-mode benchmark state of the delay-free (balanced) scheme: both
/// squeezers act on the same mode pair, composing into a single squeezer of
/// amplitude r1 + r2 at angle theta.
GaussianState build_balanced_su11(const InterferometerParams& params);

/// State family selector used by builders, scans and the command line.
enum class StateFamily { kSu11, kSu11Sub, kBs, kBsSub, kBalanced };

const char* state_family_name(StateFamily family);

/// Dispatches to the family builder. kBalanced requires mode_count == 2.
GaussianState build_family_state(StateFamily family, int mode_count,
                                 const InterferometerParams& params);

}  // namespace su11
