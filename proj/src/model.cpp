#include "sensorplace/model.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sensorplace {

namespace {

// Integer power with 0^0 = 1.
double ipow(double base, int exp) {
    double r = 1.0;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

constexpr int kMaxTableSensors = 24;

}  // namespace

SensorModel SensorModel::make(double p_d, double p_f) {
    if (!(p_d >= 0.0 && p_d <= 1.0)) throw std::invalid_argument("p_d must lie in [0,1]");
    if (!(p_f >= 0.0 && p_f <= 1.0)) throw std::invalid_argument("p_f must lie in [0,1]");
    return SensorModel{p_d, p_f};
}

SensorModel flip_model(const SensorModel& model) {
    return SensorModel{1.0 - model.p_d, 1.0 - model.p_f};
}

int Placement::at(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("point index outside 1..n");
    return j <= occupied() ? counts_[j - 1] : 0;
}

int Placement::offset(int j) const {
    if (j < 1 || j > n_) throw std::out_of_range("point index outside 1..n");
    return j <= occupied() ? offsets_[j - 1] : m_;
}

Placement Placement::with_points(int n) const {
    return canonicalize_placement(counts_, n);
}

std::string Placement::label() const {
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(counts_[i]);
    }
    return out;
}

Placement canonicalize_placement(std::span<const int> raw_counts, int n) {
    if (std::any_of(raw_counts.begin(), raw_counts.end(), [](int v) { return v < 0; }))
        throw std::invalid_argument("placement counts must be non-negative");
    if (static_cast<int>(raw_counts.size()) > n)
        throw std::invalid_argument("placement has more entries than points");

    Placement p;
    p.counts_.assign(raw_counts.begin(), raw_counts.end());
    std::erase(p.counts_, 0);
    std::sort(p.counts_.begin(), p.counts_.end(), std::greater<>{});
    p.m_ = std::accumulate(p.counts_.begin(), p.counts_.end(), 0);
    if (p.m_ < 1) throw std::invalid_argument("placement must hold at least one sensor");
    if (p.occupied() > n) throw std::invalid_argument("placement occupies more than n points");
    p.n_ = n;
    p.offsets_.resize(p.counts_.size());
    std::exclusive_scan(p.counts_.begin(), p.counts_.end(), p.offsets_.begin(), 0);
    return p;
}

Placement canonicalize_placement(std::initializer_list<int> raw_counts, int n) {
    return canonicalize_placement(std::span<const int>(raw_counts.begin(), raw_counts.size()), n);
}

Placement parse_placement(std::string_view text, int n) {
    std::vector<int> counts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto dash = text.find('-', pos);
        if (dash == std::string_view::npos) dash = text.size();
        auto token = text.substr(pos, dash - pos);
        int v = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed placement '" + std::string(text) + "'");
        counts.push_back(v);
        pos = dash + 1;
    }
    // Trailing zeros beyond n are harmless padding.
    while (static_cast<int>(counts.size()) > n && !counts.empty() && counts.back() == 0)
        counts.pop_back();
    return canonicalize_placement(counts, n);
}

int ObservationIndex::alarm_total() const { return std::popcount(bits); }

ObservationIndex ObservationIndex::from_bits(std::span<const int> y) {
    ObservationIndex idx;
    for (int b : y) {
        if (b != 0 && b != 1) throw std::invalid_argument("observation bits must be 0 or 1");
        idx.bits = (idx.bits << 1) | static_cast<std::uint32_t>(b);
    }
    return idx;
}

ObservationIndex ObservationIndex::from_bits(std::initializer_list<int> y) {
    return from_bits(std::span<const int>(y.begin(), y.size()));
}

ObservationIndex complement(ObservationIndex y, int m) {
    const std::uint32_t mask = m >= 32 ? ~0u : ((1u << m) - 1u);
    return ObservationIndex{~y.bits & mask};
}

int alarm_count_at_point(ObservationIndex y, const Placement& placement, int j) {
    const int v = placement.at(j);
    if (v == 0) return 0;
    const int m = placement.m();
    const int shift = m - placement.offset(j) - v;
    const std::uint32_t block = (y.bits >> shift) & ((1u << v) - 1u);
    return std::popcount(block);
}

double conditional_pmf(ObservationIndex y, int j, const Placement& placement,
                       const SensorModel& model) {
    const int m = placement.m();
    const int s = y.alarm_total();
    const int v = placement.at(j);
    if (v == 0) return ipow(model.p_f, s) * ipow(1.0 - model.p_f, m - s);
    const int a = alarm_count_at_point(y, placement, j);
    return ipow(model.p_d, a) * ipow(1.0 - model.p_d, v - a) * ipow(model.p_f, s - a) *
           ipow(1.0 - model.p_f, m - s - (v - a));
}

PmfTable::PmfTable(const Placement& placement, const SensorModel& model)
    : placement_(placement), model_(model) {
    const int m = placement.m();
    if (m > kMaxTableSensors) throw std::invalid_argument("too many sensors for a dense pmf table");
    observations_ = std::size_t{1} << m;
    rows_ = placement.occupied() + 1;
    values_.resize(observations_ * static_cast<std::size_t>(rows_));

    // Per-point likelihoods depend only on (a, s), so tabulate powers once.
    std::vector<double> pd(m + 1), qd(m + 1), pf(m + 1), qf(m + 1);
    for (int i = 0; i <= m; ++i) {
        pd[i] = ipow(model.p_d, i);
        qd[i] = ipow(1.0 - model.p_d, i);
        pf[i] = ipow(model.p_f, i);
        qf[i] = ipow(1.0 - model.p_f, i);
    }
    const int k = placement.occupied();
    for (std::size_t obs = 0; obs < observations_; ++obs) {
        const ObservationIndex y{static_cast<std::uint32_t>(obs)};
        const int s = y.alarm_total();
        for (int r = 0; r < k; ++r) {
            const int v = placement.counts()[r];
            const int a = alarm_count_at_point(y, placement, r + 1);
            values_[static_cast<std::size_t>(r) * observations_ + obs] =
                pd[a] * qd[v - a] * pf[s - a] * qf[m - s - (v - a)];
        }
        values_[static_cast<std::size_t>(k) * observations_ + obs] = pf[s] * qf[m - s];
    }
}

std::span<const double> PmfTable::row(int r) const {
    return std::span<const double>(values_).subspan(static_cast<std::size_t>(r) * observations_,
                                                    observations_);
}

std::span<const double> PmfTable::row_for_point(int j) const {
    if (j < 1 || j > placement_.n()) throw std::out_of_range("point index outside 1..n");
    return row(std::min(j, placement_.occupied() + 1) - 1);
}

double PmfTable::value(int j, ObservationIndex y) const { return row_for_point(j)[y.bits]; }

double PmfTable::total(ObservationIndex y) const {
    const int k = placement_.occupied();
    double s = 0.0;
    for (int r = 0; r < k; ++r) s += values_[static_cast<std::size_t>(r) * observations_ + y.bits];
    const int empty = empty_multiplicity();
    if (empty > 0) s += empty * values_[static_cast<std::size_t>(k) * observations_ + y.bits];
    return s;
}

double PmfTable::maximum(ObservationIndex y) const {
    const int k = placement_.occupied();
    double best = 0.0;
    for (int r = 0; r < k; ++r)
        best = std::max(best, values_[static_cast<std::size_t>(r) * observations_ + y.bits]);
    if (empty_multiplicity() > 0)
        best = std::max(best, values_[static_cast<std::size_t>(k) * observations_ + y.bits]);
    return best;
}

}  // namespace sensorplace
