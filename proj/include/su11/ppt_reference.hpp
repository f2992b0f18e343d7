#pragma once

#include "su11/entanglement.hpp"

namespace su11 {

/// Reference classification of the PPT-negativity character of every
/// bipartition of the six-mode steady-train state on the default
/// r1, r2 in {0.1, ..., 2.0} grid. Splits that cover all six modes are
/// negative on the whole grid; the 270 non-covering splits are tabulated.
/// Used as the regression baseline for classify_negativity.
struct ReferenceVerdict {
    const char* set_a;  // mode digits, e.g. "13" for {1,3}
    const char* set_b;
    Negativity verdict;
};

/// The 270 tabulated non-covering entries as published. Three of them are
/// misprints (see six_mode_table_misprints); the regression baseline
/// returned by six_mode_reference_verdict applies the corrections.
const std::vector<ReferenceVerdict>& six_mode_reference_table();

/// Entries of the published table whose verdicts are provably wrong: the
/// state is invariant under the mode reversal k -> 7-k, yet the published
/// classification breaks that symmetry for {1,6}|{2,4} vs {1,6}|{3,5}, and
/// two independent implementations find the other two entries negative on
/// large parts of the grid (e.g. L_mu = -0.134 at r1 = 1.8, r2 = 0.2).
/// The `verdict` field holds the corrected value.
const std::vector<ReferenceVerdict>& six_mode_table_misprints();

/// Corrected baseline verdict for any bipartition of the six-mode state
/// (covering splits included). Throws if the bipartition is not over six
/// modes.
Negativity six_mode_reference_verdict(const Bipartition& bipartition);

/// Verdict exactly as published, misprints included.
Negativity six_mode_printed_verdict(const Bipartition& bipartition);

}  // namespace su11
