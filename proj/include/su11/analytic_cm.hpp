#pragma once

#include "su11/gaussian_state.hpp"
#include "su11/interferometer.hpp"

namespace su11 {

/// Selects one of the four state families with a closed-form covariance:
/// the finite-train state, its steady-train central subsystem, and the two
/// splitter-based counterparts.
enum class FamilyTag { kSu11, kSu11Sub, kBs, kBsSub };

StateFamily to_state_family(FamilyTag tag);
const char* family_name(FamilyTag tag);

/// Direct evaluation of the closed-form covariance matrix of the selected
/// family at arbitrary mode count, independent of the schedule builders.
/// Entry patterns are piecewise in the index with exact integer-parity
/// selectors; the M = 2 (and splitter M = 3) edge cases are hard-coded
/// literals. Throws for M below the family minimum of 2.
GaussianState analytic_state(FamilyTag tag, int mode_count, const InterferometerParams& params);

/// Max-abs elementwise deviation between the closed-form covariance and the
/// schedule-built state of the same family.
double crosscheck(FamilyTag tag, int mode_count, const InterferometerParams& params);

}  // namespace su11
