#pragma once

#include <limits>
#include <vector>

#include "sensorplace/model.hpp"

namespace sensorplace {

/// Absolute P_e gap below which two placements are treated as tied.
inline constexpr double kTieTolerance = 1e-9;

/// Largest sensor count accepted by the exhaustive optimizer.
inline constexpr int kMaxSearchSensors = 20;

struct ErrorProbability {
    double value = 0.0;
    Placement placement;
    SensorModel model;
    int n = 0;
};

/// Bayes error of the MAP detector under a uniform intruder prior:
/// (1/n) * sum over y of [sum_j p_j(y) - max_j p_j(y)].
/// The placement is re-targeted to n points. Throws when m > n.
ErrorProbability error_probability(const Placement& placement, const SensorModel& model, int n);

/// Same quantity from an already built table.
double error_probability(const PmfTable& table);

/// Hypotheses (1-based) whose likelihood equals the maximum for y.
std::vector<int> map_decide(ObservationIndex y, const Placement& placement,
                            const SensorModel& model, int n);
std::vector<int> map_decide(ObservationIndex y, const PmfTable& table);

struct Optimum {
    std::vector<Placement> best;
    double pe_min = 0.0;
    /// Gap to the best placement outside the tie set; +inf when none exists.
    double margin = std::numeric_limits<double>::infinity();
    bool strict = false;
};

/// Tie-aware argmin over a list of (placement, P_e) candidates, kept in
/// the given order.
Optimum select_optimum(const std::vector<Placement>& candidates,
                       const std::vector<double>& values);

/// P_e for every partition of m over n points, in enumeration order.
std::vector<double> evaluate_partitions(int m, int n, const SensorModel& model);

/// Exhaustive search over all partitions of m. Requires 1 <= m <= n and
/// m <= 20.
Optimum optimal_placements(int m, int n, const SensorModel& model);

/// Closed forms for M = N = 2, written with the inner min terms so they hold
/// on the whole unit square. Accepts only (1,1) and (2).
double closed_form_pe2(const Placement& placement, const SensorModel& model);

}  // namespace sensorplace
