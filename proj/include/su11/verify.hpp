#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace su11 {

struct VerifyOptions {
    std::uint64_t seed = 12345;
    /// Run the oracle suite at its full depth (all families up to four modes
    /// at cutoff 12); the reduced default keeps the run in the seconds range.
    bool full_oracle = false;
    /// Name of a suite to corrupt deliberately; used by the negative tests
    /// to confirm failures are detected and reported.
    std::string inject_fault;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    double max_deviation = 0.0;
    double threshold = 0.0;
    std::string detail;
};

/// Runs every self-check suite: closed-form vs schedule covariances, photon
/// identities, quadrature saturation, subsystem identity, symplectic
/// structure, Fock-oracle agreement, bipartition counts, and the six-mode
/// PPT verdict regression.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace su11
