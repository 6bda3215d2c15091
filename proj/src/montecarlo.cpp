#include "sensorplace/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sensorplace/detection.hpp"

namespace sensorplace {

namespace {

constexpr std::uint64_t kBlockTrials = 1u << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Unbiased draw in [0, bound) by rejection.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

struct DecisionTable {
    // Decision set of each observation, flattened; 0-based hypotheses.
    std::vector<std::uint32_t> start;
    std::vector<int> members;
};

DecisionTable build_decisions(const PmfTable& table) {
    DecisionTable d;
    d.start.reserve(table.observations() + 1);
    for (std::size_t obs = 0; obs < table.observations(); ++obs) {
        d.start.push_back(static_cast<std::uint32_t>(d.members.size()));
        for (int j : map_decide(ObservationIndex{static_cast<std::uint32_t>(obs)}, table))
            d.members.push_back(j - 1);
    }
    d.start.push_back(static_cast<std::uint32_t>(d.members.size()));
    return d;
}

std::uint64_t run_block(const Placement& placement, const SensorModel& model, int n,
                        const DecisionTable& decisions, std::uint64_t trials, std::uint64_t seed,
                        std::uint64_t block, TieRule ties) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(block)));
    const int m = placement.m();
    const int k = placement.occupied();
    std::uint64_t errors = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int intruder = static_cast<int>(bounded_draw(rng, static_cast<std::uint64_t>(n)));
        std::uint32_t bits = 0;
        int sensor = 0;
        for (int r = 0; r < k; ++r) {
            const double p = r == intruder ? model.p_d : model.p_f;
            for (int c = 0; c < placement.counts()[r]; ++c, ++sensor)
                if (unit_draw(rng) < p) bits |= 1u << (m - 1 - sensor);
        }
        const auto first = decisions.start[bits];
        const auto size = decisions.start[bits + 1] - first;
        int decided = decisions.members[first];
        if (ties == TieRule::UniformRandom && size > 1)
            decided = decisions.members[first + bounded_draw(rng, size)];
        if (decided != intruder) ++errors;
    }
    return errors;
}

}  // namespace

SimResult simulate(const Placement& placement, const SensorModel& model, int n,
                   std::uint64_t trials, std::uint64_t seed, const SimOptions& options) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (placement.m() > n) throw std::invalid_argument("more sensors than points (m > n)");
    const Placement target = placement.n() == n ? placement : placement.with_points(n);
    const PmfTable table(target, model);
    const DecisionTable decisions = build_decisions(table);

    const std::uint64_t blocks = (trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<std::uint64_t> block_errors(blocks, 0);
    auto work = [&](std::uint64_t b) {
        const std::uint64_t count = std::min(kBlockTrials, trials - b * kBlockTrials);
        block_errors[b] = run_block(target, model, n, decisions, count, seed, b, options.ties);
    };

    const auto workers = static_cast<std::uint64_t>(std::max(1, options.threads));
    if (workers == 1 || blocks == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) work(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        for (std::uint64_t w = 0; w < std::min(workers, blocks); ++w)
            pool.emplace_back([&] {
                for (std::uint64_t b = next++; b < blocks; b = next++) work(b);
            });
    }

    SimResult result;
    result.trials = trials;
    result.seed = seed;
    for (auto e : block_errors) result.errors += e;
    result.pe_hat = static_cast<double>(result.errors) / static_cast<double>(trials);
    result.std_err = std::sqrt(result.pe_hat * (1.0 - result.pe_hat) / static_cast<double>(trials));
    return result;
}

}  // namespace sensorplace
