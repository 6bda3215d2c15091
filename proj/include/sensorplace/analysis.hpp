#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sensorplace/detection.hpp"
#include "sensorplace/majorization.hpp"

namespace sensorplace {

enum class PlaneRegion { PdGePf, Full };

/// Node of a regular grid over the open unit square. Coordinates are
/// index / divisions so that values such as 0.46 are the nearest doubles.
struct GridNode {
    int i_f = 0;
    int i_d = 0;
    double p_f = 0.0;
    double p_d = 0.0;
};

/// Inclusive index window of a sweep, in grid units along each axis.
struct GridWindow {
    int f_lo = 1, f_hi = -1;
    int d_lo = 1, d_hi = -1;
};

struct RegionCell {
    GridNode node;
    Optimum optimum;
};

struct RegionMap {
    int m = 0;
    int n = 0;
    double step = 0.0;
    int divisions = 0;
    PlaneRegion region = PlaneRegion::PdGePf;
    /// Row order: p_d ascending outer, p_f ascending inner.
    std::vector<RegionCell> cells;

    /// Cell at grid indices, or nullptr when outside the swept set.
    const RegionCell* find(int i_f, int i_d) const;
};

struct SweepOptions {
    PlaneRegion region = PlaneRegion::PdGePf;
    int threads = 1;
    /// Rough ceiling on likelihood evaluations (nodes * f(m) * 2^m * (m+1)).
    double budget = 2e9;
    std::optional<GridWindow> window;
};

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(double estimate);
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

/// Number of grid divisions for a step; step must divide 1 and lie in
/// [1e-3, 0.1].
int grid_divisions(double step);

std::vector<GridNode> grid_nodes(double step, PlaneRegion region,
                                 const std::optional<GridWindow>& window = std::nullopt);

double sweep_cost_estimate(int m, std::size_t nodes);

/// Runs optimal_placements at every node. Output is independent of the
/// thread count.
RegionMap sweep_plane(int m, int n, double step, const SweepOptions& options = {});

/// CSV with header p_f,p_d,best,tie_count,pe_min,margin.
void write_region_csv(const RegionMap& map, std::ostream& out);

/// Distinct placements that are strictly optimal somewhere, in order of
/// first appearance.
std::vector<Placement> strict_optima(const RegionMap& map);

// --- closed-form regions for M = N = 4 ------------------------------------

enum class PredicateStatus { Unique, Ambiguous };

struct RegionPredicate {
    PredicateStatus status = PredicateStatus::Ambiguous;
    /// Set only when exactly one region fires.
    std::optional<Placement> placement;
    /// Which regions fired, ordered (4), (3,1), (2,2), (2,1,1).
    std::array<bool, 4> fired{};
};

RegionPredicate region_predicate_m4(double p_f, double p_d);

/// True when some region predicate changes value between the node and one
/// of its eight neighbours at distance step.
bool near_predicate_boundary(double p_f, double p_d, double step);

// --- verification -----------------------------------------------------------

struct Violation {
    double p_f = 0.0;
    double p_d = 0.0;
    double magnitude = 0.0;
    std::string detail;
};

struct VerificationReport {
    std::string claim;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    double tolerance = 0.0;
    double max_violation = 0.0;
    std::size_t violation_count = 0;
    /// First violations found, capped at kMaxRecordedViolations.
    std::vector<Violation> counterexamples;
    std::vector<std::string> notes;
    bool pass = false;

    static constexpr std::size_t kMaxRecordedViolations = 64;

    void record(Violation v);
    /// pass = (no violations and max_violation <= tolerance).
    void finish();
};

/// Uniform placement never beats (2,1,...,1,0) when M = N, for M in 2..m_max.
VerificationReport verify_thm41(int m_max, double step);

/// N-invariance identity n2*(dPe at n2) = n1*(dPe at n1) for every pair
/// of partitions, plus equality of the argmin sets. Requires m < n1 < n2.
VerificationReport verify_thm42(int m, int n1, int n2, double step);

/// Strict optima at (m, m+1) are those at (m, m) plus the uniform placement.
VerificationReport verify_cor41(int m, double step);

enum class ScanAxis { IncreasingPf, IncreasingPd };

/// Along every fixed row (IncreasingPf) or column (IncreasingPd), the
/// majorization level of strict optima must never drop. Tie cells are
/// skipped; strict optima missing from the scale are violations.
VerificationReport check_monotone_on_scale(const RegionMap& map, const PlacementScale& scale,
                                           ScanAxis axis);

/// Collects strict optima and tests whether they, plus representatives
/// picked from tie sets, form a majorization chain.
VerificationReport check_conjecture_chain(const RegionMap& map);

/// Documented placement scales for m = 3, 4, 5, padded to include the
/// uniform placement at the bottom.
PlacementScale reference_scale(int m);

/// Monotonicity along both axes on the reference scale for (m, n).
VerificationReport verify_prop51(int m, int n, double step);

/// First fixed-P_D row (in grid order) at which each placement appears in
/// the optimal set of some cell that is not a full tie.
std::vector<std::pair<Placement, double>> first_rows_with_optimum(const RegionMap& map);

/// Agreement of the M = 4 closed-form regions with brute force, plus the
/// fixed-P_D thresholds 2/3, 373/539, 947/1093.
VerificationReport verify_region_predicates_m4(double step, int threads = 1);

/// The (7,8) probes and a local monotonicity scan on both axes. Passes when
/// the stated optima are reproduced and violations appear on both axes.
VerificationReport verify_counterexample(int threads = 1);

}  // namespace sensorplace
