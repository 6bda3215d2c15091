#pragma once

#include <cstdint>
#include <vector>

namespace sensorplace {

inline constexpr int kMaxPartitionTotal = 40;

/// All integer partitions of m, in reverse-lexicographic order from (m)
/// down to (1,...,1). Each item is a non-increasing count list.
struct PartitionSet {
    int m = 0;
    std::vector<std::vector<int>> items;

    std::size_t size() const { return items.size(); }
};

PartitionSet enumerate_partitions(int m);

/// Exact partition function f(m), 1 <= m <= 40.
std::uint64_t partition_count(int m);

/// Asymptotic estimate exp(pi*sqrt(2m/3)) / (4 m sqrt(3)).
double hardy_ramanujan_estimate(int m);

}  // namespace sensorplace
