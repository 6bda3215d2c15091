#pragma once

// Independent reference computations used only by the tests. Nothing here
// shares code with the library's evaluation path.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

/// Sensor -> point assignment (0-based points), one entry per sensor in
/// reading order y_1..y_M.
using Positions = std::vector<int>;

/// Expands counts into consecutive blocks: {2,1} -> {0,0,1}.
inline Positions blocks(const std::vector<int>& counts) {
    Positions pos;
    for (std::size_t j = 0; j < counts.size(); ++j)
        for (int c = 0; c < counts[j]; ++c) pos.push_back(static_cast<int>(j));
    return pos;
}

/// Per-sensor product p_j(y) with intruder at 0-based point j.
inline double pmf(const Positions& pos, std::uint32_t y, int j, double pd, double pf) {
    const int m = static_cast<int>(pos.size());
    double p = 1.0;
    for (int k = 0; k < m; ++k) {
        const int bit = static_cast<int>((y >> (m - 1 - k)) & 1u);
        const double alarm = pos[k] == j ? pd : pf;
        p *= bit ? alarm : 1.0 - alarm;
    }
    return p;
}

/// (1/n) sum_y min_i sum_{j != i} p_j(y), evaluated literally.
inline double pe_leave_one_out(const Positions& pos, int n, double pd, double pf) {
    const int m = static_cast<int>(pos.size());
    double total = 0.0;
    for (std::uint32_t y = 0; y < (1u << m); ++y) {
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += pmf(pos, y, j, pd, pf);
            best = std::min(best, s);
        }
        total += best;
    }
    return total / n;
}

/// Euler pentagonal-number recurrence for the partition function.
inline std::vector<std::uint64_t> partition_numbers(int upto) {
    std::vector<std::int64_t> p(upto + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= upto; ++n) {
        std::int64_t acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const std::int64_t sign = (k % 2) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= n) acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return {p.begin(), p.end()};
}

/// Partitions by recursion on the largest part.
inline void partitions_rec(int rest, int cap, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (rest == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(rest, cap); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(rest - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(m, m, cur, out);
    return out;
}

/// Majorization by definition: compare sorted prefix sums elementwise.
/// Returns +1 (x above), -1 (below), 0 (equal), 2 (incomparable).
inline int majorizes(std::vector<int> x, std::vector<int> y) {
    std::sort(x.rbegin(), x.rend());
    std::sort(y.rbegin(), y.rend());
    const std::size_t len = std::max(x.size(), y.size());
    x.resize(len, 0);
    y.resize(len, 0);
    bool ge = true, le = true;
    int sx = 0, sy = 0;
    for (std::size_t k = 0; k < len; ++k) {
        sx += x[k];
        sy += y[k];
        ge = ge && sx >= sy;
        le = le && sx <= sy;
    }
    if (ge && le) return 0;
    if (ge) return 1;
    if (le) return -1;
    return 2;
}

}  // namespace oracle
