#include "sensorplace/partitions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sensorplace {

namespace {

void check_bounds(int m) {
    if (m < 1 || m > kMaxPartitionTotal)
        throw std::invalid_argument("partition total must lie in [1, 40]");
}

}  // namespace

PartitionSet enumerate_partitions(int m) {
    check_bounds(m);
    PartitionSet set;
    set.m = m;

    // Successor rule for reverse-lex order: drop trailing ones, decrement the
    // last part > 1, then refill with copies of the new value.
    std::vector<int> cur{m};
    for (;;) {
        set.items.push_back(cur);
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty()) break;
        const int k = --cur.back();
        int rest = ones + 1;
        while (rest > k) {
            cur.push_back(k);
            rest -= k;
        }
        if (rest > 0) cur.push_back(rest);
    }
    return set;
}

std::uint64_t partition_count(int m) {
    check_bounds(m);
    // Count partitions with parts <= k by dynamic programming over part size.
    std::vector<std::uint64_t> ways(m + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int t = part; t <= m; ++t) ways[t] += ways[t - part];
    return ways[m];
}

double hardy_ramanujan_estimate(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const double x = static_cast<double>(m);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace sensorplace
