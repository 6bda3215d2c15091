#include "sensorplace/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sensorplace/partitions.hpp"

namespace sensorplace {

namespace {

void check_fits(int m, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (m > n) throw std::invalid_argument("more sensors than points (m > n)");
}

// Relative slack for deciding that two likelihoods tie. Rows that are equal
// in exact arithmetic can be built from different power products.
constexpr double kLikelihoodTieRel = 1e-12;

}  // namespace

double error_probability(const PmfTable& table) {
    const auto& placement = table.placement();
    check_fits(placement.m(), placement.n());
    double sum = 0.0;
    for (std::size_t obs = 0; obs < table.observations(); ++obs) {
        const ObservationIndex y{static_cast<std::uint32_t>(obs)};
        sum += table.total(y) - table.maximum(y);
    }
    return sum / placement.n();
}

ErrorProbability error_probability(const Placement& placement, const SensorModel& model, int n) {
    check_fits(placement.m(), n);
    Placement target = placement.n() == n ? placement : placement.with_points(n);
    const PmfTable table(target, model);
    return ErrorProbability{error_probability(table), std::move(target), model, n};
}

std::vector<int> map_decide(ObservationIndex y, const PmfTable& table) {
    const auto& placement = table.placement();
    const int n = placement.n();
    const int k = placement.occupied();
    const double best = table.maximum(y);
    const double cutoff = best - kLikelihoodTieRel * best;

    std::vector<int> out;
    for (int j = 1; j <= k; ++j)
        if (table.value(j, y) >= cutoff) out.push_back(j);
    if (n > k && table.value(k + 1, y) >= cutoff)
        for (int j = k + 1; j <= n; ++j) out.push_back(j);
    return out;
}

std::vector<int> map_decide(ObservationIndex y, const Placement& placement,
                            const SensorModel& model, int n) {
    check_fits(placement.m(), n);
    const PmfTable table(placement.n() == n ? placement : placement.with_points(n), model);
    if (y.bits >= table.observations()) throw std::out_of_range("observation index out of range");
    return map_decide(y, table);
}

Optimum select_optimum(const std::vector<Placement>& candidates,
                       const std::vector<double>& values) {
    if (candidates.empty() || candidates.size() != values.size())
        throw std::invalid_argument("candidate and value lists must be non-empty and aligned");

    Optimum opt;
    opt.pe_min = *std::min_element(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double gap = values[i] - opt.pe_min;
        if (gap <= kTieTolerance)
            opt.best.push_back(candidates[i]);
        else
            opt.margin = std::min(opt.margin, gap);
    }
    opt.strict = opt.best.size() == 1 && opt.margin > kTieTolerance;
    return opt;
}

std::vector<double> evaluate_partitions(int m, int n, const SensorModel& model) {
    check_fits(m, n);
    if (m > kMaxSearchSensors) throw std::invalid_argument("exhaustive search limited to m <= 20");
    const auto parts = enumerate_partitions(m);
    std::vector<double> values;
    values.reserve(parts.size());
    for (const auto& counts : parts.items)
        values.push_back(error_probability(PmfTable(canonicalize_placement(counts, n), model)));
    return values;
}

Optimum optimal_placements(int m, int n, const SensorModel& model) {
    const auto values = evaluate_partitions(m, n, model);
    const auto parts = enumerate_partitions(m);
    std::vector<Placement> candidates;
    candidates.reserve(parts.size());
    for (const auto& counts : parts.items) candidates.push_back(canonicalize_placement(counts, n));
    return select_optimum(candidates, values);
}

double closed_form_pe2(const Placement& placement, const SensorModel& model) {
    if (placement.m() != 2 || placement.n() != 2)
        throw std::invalid_argument("closed form covers only m = n = 2");
    const double pd = model.p_d;
    const double pf = model.p_f;
    if (placement.occupied() == 2) {
        return 0.5 * ((1 - pd) * (1 - pf) + pd * pf + 2 * std::min(pf - pd * pf, pd - pd * pf));
    }
    return 0.5 * (std::min((1 - pd) * (1 - pd), (1 - pf) * (1 - pf)) + std::min(pd * pd, pf * pf) +
                  2 * std::min(pd * (1 - pd), pf * (1 - pf)));
}

}  // namespace sensorplace
