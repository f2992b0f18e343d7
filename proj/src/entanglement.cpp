#include "su11/entanglement.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace su11 {

namespace {

std::vector<int> checked_sorted_set(int universe, std::vector<int> modes, const char* label) {
    if (modes.empty()) {
        throw std::invalid_argument(std::string(label) + " set must not be empty");
    }
    std::sort(modes.begin(), modes.end());
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (modes[k] < 1 || modes[k] > universe) {
            throw std::invalid_argument(std::string(label) + " set index out of range");
        }
        if (k > 0 && modes[k] == modes[k - 1]) {
            throw std::invalid_argument(std::string(label) + " set has duplicate indices");
        }
    }
    return modes;
}

std::string set_to_string(const std::vector<int>& modes) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (k > 0) {
            out << ',';
        }
        out << modes[k];
    }
    out << '}';
    return out.str();
}

}  // namespace

Bipartition::Bipartition(int universe, std::vector<int> set_a, std::vector<int> set_b)
    : universe_(universe),
      set_a_(checked_sorted_set(universe, std::move(set_a), "A")),
      set_b_(checked_sorted_set(universe, std::move(set_b), "B")) {
    if (universe_ < 2) {
        throw std::invalid_argument("bipartition universe must have at least 2 modes");
    }
    std::vector<int> overlap;
    std::set_intersection(set_a_.begin(), set_a_.end(), set_b_.begin(), set_b_.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) {
        throw std::invalid_argument("A and B must be disjoint");
    }
}

bool Bipartition::covers_universe() const {
    return static_cast<int>(set_a_.size() + set_b_.size()) == universe_;
}

Bipartition Bipartition::canonical() const {
    if (set_a_.front() < set_b_.front()) {
        return *this;
    }
    return Bipartition(universe_, set_b_, set_a_);
}

std::string Bipartition::id() const {
    const Bipartition c = canonical();
    return "A=" + set_to_string(c.set_a_) + "|B=" + set_to_string(c.set_b_);
}

double quad_lc_variance(const QuadratureCM& sigma, const RVector& weights) {
    if (weights.size() != sigma.matrix().rows()) {
        throw std::invalid_argument("weight vector length must be 2M");
    }
    return 0.5 * weights.dot(sigma.matrix() * weights);
}

double quad_lc_variance(const GaussianState& state, const RVector& weights) {
    return quad_lc_variance(to_quadrature(state), weights);
}

MinQuadVariance min_quad_variance(const GaussianState& state) {
    const QuadratureCM sigma = to_quadrature(state);
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(sigma.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition of the quadrature CM failed");
    }
    return MinQuadVariance{0.5 * solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

QuadratureCM ppt_rearrange(const GaussianState& state, const Bipartition& bipartition) {
    if (bipartition.universe() != state.mode_count()) {
        throw std::invalid_argument("bipartition universe must match the state's mode count");
    }
    std::vector<int> keep(bipartition.set_a());
    keep.insert(keep.end(), bipartition.set_b().begin(), bipartition.set_b().end());
    std::sort(keep.begin(), keep.end());
    const QuadratureCM traced = to_quadrature(partial_trace(state, keep));

    // Position of each kept mode inside the traced state, in A-then-B order.
    std::vector<int> order;
    order.reserve(keep.size());
    for (const auto& group : {bipartition.set_a(), bipartition.set_b()}) {
        for (int mode : group) {
            const auto it = std::lower_bound(keep.begin(), keep.end(), mode);
            order.push_back(static_cast<int>(it - keep.begin()));
        }
    }

    const int n = static_cast<int>(order.size());
    RMatrix out(2 * n, 2 * n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            for (int dp = 0; dp < 2; ++dp) {
                for (int dq = 0; dq < 2; ++dq) {
                    out(2 * p + dp, 2 * q + dq) =
                        traced.matrix()(2 * order[p] + dp, 2 * order[q] + dq);
                }
            }
        }
    }
    return QuadratureCM(n, std::move(out));
}

QuadratureCM partial_transpose(const QuadratureCM& sigma, int n_a, int n_b) {
    if (n_a < 0 || n_b < 0 || n_a + n_b != sigma.mode_count()) {
        throw std::invalid_argument("partial transpose block sizes must sum to the mode count");
    }
    const int dim = 2 * (n_a + n_b);
    RVector signs = RVector::Ones(dim);
    for (int k = 0; k < n_a; ++k) {
        signs(2 * k + 1) = -1.0;
    }
    RMatrix out = signs.asDiagonal() * sigma.matrix() * signs.asDiagonal();
    return QuadratureCM(sigma.mode_count(), std::move(out));
}

SymplecticSpectrum symplectic_eigenvalues(const QuadratureCM& sigma) {
    const int n = sigma.mode_count();
    const RMatrix& s = sigma.matrix();

    Eigen::SelfAdjointEigenSolver<RMatrix> definiteness(s, Eigen::EigenvaluesOnly);
    if (definiteness.eigenvalues()(0) < -kNegativityEps) {
        throw std::invalid_argument("covariance matrix is not positive semidefinite");
    }

    // i Omega sigma with the interleaved form Omega = diag([[0,1],[-1,0]]).
    CMatrix m(2 * n, 2 * n);
    const Complex iu(0.0, 1.0);
    for (int k = 0; k < n; ++k) {
        m.row(2 * k) = iu * s.row(2 * k + 1).cast<Complex>();
        m.row(2 * k + 1) = -iu * s.row(2 * k).cast<Complex>();
    }
    Eigen::ComplexEigenSolver<CMatrix> solver(m, false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("symplectic eigenvalue computation failed");
    }
    std::vector<double> moduli(2 * n);
    for (int k = 0; k < 2 * n; ++k) {
        moduli[k] = std::abs(solver.eigenvalues()(k));
    }
    std::sort(moduli.begin(), moduli.end());

    SymplecticSpectrum spectrum;
    spectrum.values.reserve(n);
    for (int k = 0; k < n; ++k) {
        const double lo = moduli[2 * k];
        const double hi = moduli[2 * k + 1];
        if (hi - lo > 1e-8 * std::max(1.0, hi)) {
            throw std::runtime_error("symplectic eigenvalues failed to pair up");
        }
        spectrum.values.push_back(0.5 * (lo + hi));
    }
    return spectrum;
}

double log_min_ppt(const GaussianState& state, const Bipartition& bipartition) {
    const QuadratureCM rearranged = ppt_rearrange(state, bipartition);
    const QuadratureCM transposed =
        partial_transpose(rearranged, static_cast<int>(bipartition.set_a().size()),
                          static_cast<int>(bipartition.set_b().size()));
    return std::log10(symplectic_eigenvalues(transposed).min());
}

std::vector<Bipartition> enumerate_bipartitions(int mode_count, bool require_cover) {
    if (mode_count < 2) {
        throw std::invalid_argument("enumeration requires at least 2 modes");
    }
    std::vector<Bipartition> result;
    // Ternary assignment of each mode to {unused, A, B}; canonical form is
    // enforced by requiring the smallest used mode to sit in A.
    const auto total = static_cast<long long>(std::pow(3.0, mode_count) + 0.5);
    for (long long code = 0; code < total; ++code) {
        long long rest = code;
        std::vector<int> a, b;
        for (int mode = 1; mode <= mode_count; ++mode) {
            const int digit = static_cast<int>(rest % 3);
            rest /= 3;
            if (digit == 1) {
                a.push_back(mode);
            } else if (digit == 2) {
                b.push_back(mode);
            }
        }
        if (a.empty() || b.empty()) {
            continue;
        }
        if (a.front() > b.front()) {
            continue;  // the swapped assignment is enumerated separately
        }
        if (require_cover && static_cast<int>(a.size() + b.size()) != mode_count) {
            continue;
        }
        result.emplace_back(mode_count, std::move(a), std::move(b));
    }
    return result;
}

ParamGrid ParamGrid::linspace(double r1_min, double r1_max, int r1_steps, double r2_min,
                              double r2_max, int r2_steps) {
    if (r1_steps < 1 || r2_steps < 1) {
        throw std::invalid_argument("grid needs at least one step per axis");
    }
    if (r1_min > r1_max || r2_min > r2_max) {
        throw std::invalid_argument("grid bounds must satisfy min <= max");
    }
    if (r1_min <= 0.0 || r2_min <= 0.0) {
        throw std::invalid_argument("grid must exclude the r1 = 0 and r2 = 0 axes");
    }
    ParamGrid grid;
    const auto fill = [](std::vector<double>& values, double lo, double hi, int steps) {
        values.resize(steps);
        if (steps == 1) {
            values[0] = lo;
            return;
        }
        for (int k = 0; k < steps; ++k) {
            values[k] = lo + (hi - lo) * k / (steps - 1);
        }
    };
    fill(grid.r1_values, r1_min, r1_max, r1_steps);
    fill(grid.r2_values, r2_min, r2_max, r2_steps);
    return grid;
}

const char* negativity_name(Negativity value) {
    switch (value) {
        case Negativity::kAlways:
            return "always";
        case Negativity::kPartial:
            return "partial";
        case Negativity::kNone:
            return "none";
    }
    return "?";
}

namespace {

NegativityVerdict verdict_from_grid(const Bipartition& bipartition, const ParamGrid& grid,
                                    const RMatrix& l_mu) {
    NegativityVerdict verdict{bipartition, Negativity::kNone, {}, {}, 0, 0};
    bool first = true;
    for (int a = 0; a < static_cast<int>(grid.r1_values.size()); ++a) {
        for (int b = 0; b < static_cast<int>(grid.r2_values.size()); ++b) {
            const GridWitness point{grid.r1_values[a], grid.r2_values[b], l_mu(a, b)};
            if (first || point.l_mu < verdict.min_point.l_mu) {
                verdict.min_point = point;
            }
            if (first || point.l_mu > verdict.max_point.l_mu) {
                verdict.max_point = point;
            }
            first = false;
            ++verdict.total_count;
            if (point.l_mu < -kNegativityEps) {
                ++verdict.negative_count;
            }
        }
    }
    if (verdict.negative_count == verdict.total_count) {
        verdict.verdict = Negativity::kAlways;
    } else if (verdict.negative_count > 0) {
        verdict.verdict = Negativity::kPartial;
    } else {
        verdict.verdict = Negativity::kNone;
    }
    return verdict;
}

}  // namespace

ScanResult scan_bipartitions(StateFamily family, int mode_count, const InterferometerParams& base,
                             const std::vector<Bipartition>& bipartitions, const ParamGrid& grid,
                             int threads) {
    if (grid.size() == 0) {
        throw std::invalid_argument("grid must not be empty");
    }
    for (const auto& bp : bipartitions) {
        if (bp.universe() != mode_count) {
            throw std::invalid_argument("bipartition universe must match the scan mode count");
        }
    }
    const int n1 = static_cast<int>(grid.r1_values.size());
    const int n2 = static_cast<int>(grid.r2_values.size());

    ScanResult result;
    result.grid = grid;
    result.bipartitions = bipartitions;
    result.l_mu.assign(bipartitions.size(), RMatrix::Zero(n1, n2));

    const int worker_count = threads > 0
                                 ? threads
                                 : std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next_point{0};
    std::atomic<bool> failed{false};
    std::string error_message;
    std::mutex error_mutex;

    const auto work = [&]() {
        try {
            while (true) {
                const int point = next_point.fetch_add(1);
                if (point >= n1 * n2 || failed.load()) {
                    break;
                }
                const int a = point / n2;
                const int b = point % n2;
                InterferometerParams params = base;
                params.r1 = grid.r1_values[a];
                params.r2 = grid.r2_values[b];
                const GaussianState state = build_family_state(family, mode_count, params);
                for (std::size_t idx = 0; idx < bipartitions.size(); ++idx) {
                    result.l_mu[idx](a, b) = log_min_ppt(state, bipartitions[idx]);
                }
            }
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mutex);
            failed.store(true);
            if (error_message.empty()) {
                error_message = e.what();
            }
        }
    };

    std::vector<std::thread> pool;
    for (int t = 0; t < worker_count - 1; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
        t.join();
    }
    if (failed.load()) {
        throw std::runtime_error("grid scan failed: " + error_message);
    }

    result.verdicts.reserve(bipartitions.size());
    for (std::size_t idx = 0; idx < bipartitions.size(); ++idx) {
        result.verdicts.push_back(verdict_from_grid(bipartitions[idx], grid, result.l_mu[idx]));
    }
    return result;
}

RMatrix scan_lmu(StateFamily family, int mode_count, const InterferometerParams& base,
                 const Bipartition& bipartition, const ParamGrid& grid) {
    return scan_bipartitions(family, mode_count, base, {bipartition}, grid).l_mu.front();
}

NegativityVerdict classify_negativity(StateFamily family, int mode_count,
                                      const InterferometerParams& base,
                                      const Bipartition& bipartition, const ParamGrid& grid) {
    return scan_bipartitions(family, mode_count, base, {bipartition}, grid).verdicts.front();
}

bool predicts_always_negativity(const Bipartition& bipartition) {
    const auto& a = bipartition.set_a();
    const auto& b = bipartition.set_b();
    if ((a.size() == 2 && b.size() == 3) || (a.size() == 3 && b.size() == 2)) {
        return true;
    }
    const auto contains = [](const std::vector<int>& set, int mode) {
        return std::binary_search(set.begin(), set.end(), mode);
    };
    for (int t = 1; 2 * t + 2 <= bipartition.universe(); ++t) {
        bool window_covered = true;
        bool touches_a = false;
        bool touches_b = false;
        for (int mode = 2 * t - 1; mode <= 2 * t + 2; ++mode) {
            const bool in_a = contains(a, mode);
            const bool in_b = contains(b, mode);
            touches_a = touches_a || in_a;
            touches_b = touches_b || in_b;
            window_covered = window_covered && (in_a || in_b);
        }
        if (window_covered && touches_a && touches_b) {
            return true;
        }
    }
    return false;
}

}  // namespace su11
