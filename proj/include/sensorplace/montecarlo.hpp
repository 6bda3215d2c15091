#pragma once

#include <cstdint>

#include "sensorplace/model.hpp"

namespace sensorplace {

enum class TieRule { UniformRandom, LowestIndex };

struct SimResult {
    std::uint64_t trials = 0;
    std::uint64_t errors = 0;
    double pe_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const SimResult&, const SimResult&) = default;
};

struct SimOptions {
    TieRule ties = TieRule::UniformRandom;
    int threads = 1;
};

/// Simulates uniform intruder location, Bernoulli alarms and the MAP
/// decision. Trials are split into fixed-size blocks, each with its own
/// stream derived from (seed, block), so the result does not depend on the
/// thread count.
SimResult simulate(const Placement& placement, const SensorModel& model, int n,
                   std::uint64_t trials, std::uint64_t seed, const SimOptions& options = {});

}  // namespace sensorplace
