#pragma once

#include <string>
#include <vector>

#include "su11/gaussian_state.hpp"
#include "su11/interferometer.hpp"

namespace su11 {

/// An ordered pair of disjoint, non-empty mode-index sets over {1..M}.
/// Construction validates and sorts; the A/B order given by the caller is
/// preserved (log_min_ppt is symmetric under swapping, which the test suite
/// checks). canonical() and id() use the deduplicated form min(A) < min(B).
class Bipartition {
public:
    Bipartition(int universe, std::vector<int> set_a, std::vector<int> set_b);

    int universe() const { return universe_; }
    const std::vector<int>& set_a() const { return set_a_; }
    const std::vector<int>& set_b() const { return set_b_; }

    bool covers_universe() const;

    /// Swapped into min(A) < min(B) order if necessary.
    Bipartition canonical() const;

    /// Stable identifier "A={...}|B={...}" of the canonical form.
    std::string id() const;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;

private:
    int universe_;
    std::vector<int> set_a_;
    std::vector<int> set_b_;
};

/// Variance of the quadrature combination w . q as (1/2) w^T sigma w, for a
/// weight vector over the interleaved (X1, P1, X2, P2, ...) basis.
double quad_lc_variance(const GaussianState& state, const RVector& weights);
double quad_lc_variance(const QuadratureCM& sigma, const RVector& weights);

struct MinQuadVariance {
    double value;      // lambda_min(sigma) / 2
    RVector weights;   // unit-norm minimizer
};

/// Minimum of quad_lc_variance over unit-norm weight vectors, i.e. the
/// smallest eigenvalue of sigma (halved) with its eigenvector.
MinQuadVariance min_quad_variance(const GaussianState& state);

/// Quadrature CM of the modes in A followed by the modes in B (each in
/// ascending order, X/P interleaved); modes outside A u B are traced out.
QuadratureCM ppt_rearrange(const GaussianState& state, const Bipartition& bipartition);

/// Congruence sigma -> theta sigma theta with theta flipping the sign of the
/// P rows/columns of the first n_a modes. Involutive; n_a = 0 is the
/// identity map.
QuadratureCM partial_transpose(const QuadratureCM& sigma, int n_a, int n_b);

/// Symplectic spectrum: moduli of the eigenvalues of i Omega sigma with the
/// interleaved symplectic form, deduplicated from +- pairs and sorted
/// ascending. Physical states have every value >= 1.
struct SymplecticSpectrum {
    std::vector<double> values;

    double min() const { return values.front(); }
};

SymplecticSpectrum symplectic_eigenvalues(const QuadratureCM& sigma);

/// Logarithmic minimum symplectic eigenvalue of the partially transposed CM:
/// log10(min nu). Negative values certify entanglement between A and B.
double log_min_ppt(const GaussianState& state, const Bipartition& bipartition);

/// All canonical bipartitions of {1..M}; with require_cover only those with
/// A u B = {1..M}. (M = 6 yields 301, respectively 31.)
std::vector<Bipartition> enumerate_bipartitions(int mode_count, bool require_cover);

/// Rectangular (r1, r2) lattice; both axes must stay away from zero.
struct ParamGrid {
    std::vector<double> r1_values;
    std::vector<double> r2_values;

    static ParamGrid linspace(double r1_min, double r1_max, int r1_steps, double r2_min,
                              double r2_max, int r2_steps);

    std::size_t size() const { return r1_values.size() * r2_values.size(); }
};

enum class Negativity { kAlways, kPartial, kNone };

const char* negativity_name(Negativity value);

struct GridWitness {
    double r1 = 0.0;
    double r2 = 0.0;
    double l_mu = 0.0;
};

/// Per-bipartition verdict over a (r1, r2) grid with witness points. With
/// eps = 1e-9: kAlways means L_mu < -eps on every point, kNone means
/// L_mu >= -eps everywhere, kPartial otherwise.
struct NegativityVerdict {
    Bipartition bipartition;
    Negativity verdict;
    GridWitness min_point;   // grid point with the smallest L_mu
    GridWitness max_point;   // grid point with the largest L_mu
    int negative_count = 0;
    int total_count = 0;
};

inline constexpr double kNegativityEps = 1e-9;

/// L_mu over the grid for one bipartition; rows follow r1, columns r2.
RMatrix scan_lmu(StateFamily family, int mode_count, const InterferometerParams& base,
                 const Bipartition& bipartition, const ParamGrid& grid);

NegativityVerdict classify_negativity(StateFamily family, int mode_count,
                                      const InterferometerParams& base,
                                      const Bipartition& bipartition, const ParamGrid& grid);

/// Grid scan over many bipartitions sharing the per-point states. Work is
/// split across threads by grid point and merged by index, so results are
/// deterministic regardless of thread count.
struct ScanResult {
    ParamGrid grid;
    std::vector<Bipartition> bipartitions;
    std::vector<RMatrix> l_mu;  // one (r1 x r2) matrix per bipartition
    std::vector<NegativityVerdict> verdicts;
};

ScanResult scan_bipartitions(StateFamily family, int mode_count, const InterferometerParams& base,
                             const std::vector<Bipartition>& bipartitions, const ParamGrid& grid,
                             int threads = 0);

/// Structural test of the two conditions under which the six-mode reference
/// classification reports negativity for every grid point: (1) A u B
/// contains a full two-slot window {2t-1..2t+2} with members from both
/// sides, or (2) the split sizes are {2, 3}. Exploratory helper only; the
/// regression baseline is the reference table itself.
bool predicts_always_negativity(const Bipartition& bipartition);

}  // namespace su11
