#include "su11/interferometer.hpp"

#include <stdexcept>
#include <string>

namespace su11 {

int mode_index(Channel channel, int t) {
    if (t < 1) {
        throw std::invalid_argument("timing slot index must be >= 1");
    }
    return channel == Channel::kIdler ? 2 * t - 1 : 2 * t;
}

PumpSchedule su11_schedule(int mode_count) {
    if (mode_count < 2) {
        throw std::invalid_argument("schedule needs at least 2 modes");
    }
    PumpSchedule schedule;
    schedule.mode_count = mode_count;
    // Slot t of the first pump couples (2t, 2t+1): the signal of slot t with
    // the idler squeezed one slot earlier and delayed into slot t+1. Slot t
    // of the second pump couples (2t-1, 2t). Walking the slots in order
    // satisfies both timing rules.
    for (int t = 1; 2 * t <= mode_count; ++t) {
        if (2 * t + 1 <= mode_count) {
            schedule.steps.push_back({PumpKind::kTmsq1, 2 * t, 2 * t + 1});
        }
        schedule.steps.push_back({PumpKind::kTmsq2, 2 * t - 1, 2 * t});
    }
    return schedule;
}

PumpSchedule bs_schedule(int mode_count) {
    PumpSchedule schedule = su11_schedule(mode_count);
    for (auto& step : schedule.steps) {
        if (step.kind == PumpKind::kTmsq2) {
            step.kind = PumpKind::kBeamSplit;
        }
    }
    return schedule;
}

GaussianState run_schedule(const PumpSchedule& schedule, const InterferometerParams& params) {
    GaussianState state = GaussianState::vacuum(schedule.mode_count);
    for (const auto& step : schedule.steps) {
        switch (step.kind) {
            // The first-stage squeezers set the phase reference and run at
            // angle zero; theta is the relative angle of the second stage.
            case PumpKind::kTmsq1:
                state = apply(tmsq_matrix(schedule.mode_count, step.i, step.j, params.r1, 0.0),
                              state);
                break;
            case PumpKind::kTmsq2:
                state = apply(tmsq_matrix(schedule.mode_count, step.i, step.j, params.r2,
                                          params.theta),
                              state);
                break;
            case PumpKind::kBeamSplit:
                state = apply(bs_matrix(schedule.mode_count, step.i, step.j, params.phi), state);
                break;
        }
    }
    return state;
}

GaussianState build_rho(int mode_count, const InterferometerParams& params) {
    return run_schedule(su11_schedule(mode_count), params);
}

GaussianState build_rho_s(int mode_count, const InterferometerParams& params) {
    if (mode_count < 2) {
        throw std::invalid_argument("subsystem state needs at least 2 modes");
    }
    std::vector<int> middle(mode_count);
    for (int k = 0; k < mode_count; ++k) {
        middle[k] = k + 3;
    }
    return partial_trace(build_rho(mode_count + 4, params), middle);
}

GaussianState build_rho_bs(int mode_count, const InterferometerParams& params) {
    return run_schedule(bs_schedule(mode_count), params);
}

GaussianState build_rho_bs_s(int mode_count, const InterferometerParams& params) {
    if (mode_count < 2) {
        throw std::invalid_argument("subsystem state needs at least 2 modes");
    }
    std::vector<int> middle(mode_count);
    for (int k = 0; k < mode_count; ++k) {
        middle[k] = k + 3;
    }
    return partial_trace(build_rho_bs(mode_count + 4, params), middle);
}

GaussianState build_balanced_su11(const InterferometerParams& params) {
    GaussianState state = GaussianState::vacuum(2);
    state = apply(tmsq_matrix(2, 1, 2, params.r1, params.theta), state);
    state = apply(tmsq_matrix(2, 1, 2, params.r2, params.theta), state);
    return state;
}

const char* state_family_name(StateFamily family) {
    switch (family) {
        case StateFamily::kSu11:
            return "su11";
        case StateFamily::kSu11Sub:
            return "su11-sub";
        case StateFamily::kBs:
            return "bs";
        case StateFamily::kBsSub:
            return "bs-sub";
        case StateFamily::kBalanced:
            return "balanced";
    }
    return "?";
}

GaussianState build_family_state(StateFamily family, int mode_count,
                                 const InterferometerParams& params) {
    switch (family) {
        case StateFamily::kSu11:
            return build_rho(mode_count, params);
        case StateFamily::kSu11Sub:
            return build_rho_s(mode_count, params);
        case StateFamily::kBs:
            return build_rho_bs(mode_count, params);
        case StateFamily::kBsSub:
            return build_rho_bs_s(mode_count, params);
        case StateFamily::kBalanced:
            if (mode_count != 2) {
                throw std::invalid_argument("balanced benchmark state has exactly 2 modes");
            }
            return build_balanced_su11(params);
    }
    throw std::invalid_argument("unknown state family");
}

}  // namespace su11
