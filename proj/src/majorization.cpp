#include "sensorplace/majorization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace sensorplace {

namespace {

std::vector<int> prefix_sums(std::span<const int> counts, std::size_t length) {
    std::vector<int> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>{});
    sorted.resize(length, 0);
    std::vector<int> sums(length);
    std::inclusive_scan(sorted.begin(), sorted.end(), sums.begin());
    return sums;
}

}  // namespace

char verdict_code(MajorizationVerdict v) {
    switch (v) {
        case MajorizationVerdict::StrictlyAbove: return 'A';
        case MajorizationVerdict::StrictlyBelow: return 'B';
        case MajorizationVerdict::Equal: return 'E';
        case MajorizationVerdict::Incomparable: return 'I';
    }
    return '?';
}

std::string_view verdict_name(MajorizationVerdict v) {
    switch (v) {
        case MajorizationVerdict::StrictlyAbove: return "strictly_above";
        case MajorizationVerdict::StrictlyBelow: return "strictly_below";
        case MajorizationVerdict::Equal: return "equal";
        case MajorizationVerdict::Incomparable: return "incomparable";
    }
    return "unknown";
}

MajorizationVerdict compare(std::span<const int> x, std::span<const int> y) {
    const std::size_t len = std::max(x.size(), y.size());
    const auto px = prefix_sums(x, len);
    const auto py = prefix_sums(y, len);
    if (len == 0 || px.back() != py.back())
        throw std::invalid_argument("majorization needs placements of the same total");

    bool x_dominates = true;
    bool y_dominates = true;
    for (std::size_t k = 0; k < len; ++k) {
        if (px[k] < py[k]) x_dominates = false;
        if (py[k] < px[k]) y_dominates = false;
    }
    if (x_dominates && y_dominates) return MajorizationVerdict::Equal;
    if (x_dominates) return MajorizationVerdict::StrictlyAbove;
    if (y_dominates) return MajorizationVerdict::StrictlyBelow;
    return MajorizationVerdict::Incomparable;
}

MajorizationVerdict compare(const Placement& x, const Placement& y) {
    return compare(std::span<const int>(x.counts()), std::span<const int>(y.counts()));
}

ChainCheck is_chain(std::span<const Placement> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (compare(set[i], set[j]) == MajorizationVerdict::Incomparable)
                return ChainCheck{false, std::pair{set[i], set[j]}};
    return {};
}

std::optional<std::size_t> PlacementScale::index_of(const Placement& p) const {
    auto it = std::find(members_.begin(), members_.end(), p);
    if (it == members_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

std::optional<std::size_t> PlacementScale::level_of(const Placement& p) const {
    auto idx = index_of(p);
    if (!idx) return std::nullopt;
    return members_.size() - 1 - *idx;
}

NotAChainError::NotAChainError(Placement a, Placement b)
    : std::invalid_argument("placements " + a.label() + " and " + b.label() +
                            " are not comparable under majorization"),
      pair_(std::move(a), std::move(b)) {}

PlacementScale chain_sort(std::span<const Placement> set) {
    auto check = is_chain(set);
    if (!check.is_chain) throw NotAChainError(check.offending->first, check.offending->second);

    PlacementScale scale;
    scale.members_.assign(set.begin(), set.end());
    std::size_t len = 0;
    for (const auto& p : set) len = std::max(len, p.counts().size());
    // Prefix-sum vectors compared lexicographically give a total order that
    // agrees with majorization on any chain.
    std::stable_sort(scale.members_.begin(), scale.members_.end(),
                     [len](const Placement& a, const Placement& b) {
                         return prefix_sums(a.counts(), len) > prefix_sums(b.counts(), len);
                     });
    scale.members_.erase(std::unique(scale.members_.begin(), scale.members_.end()),
                         scale.members_.end());
    return scale;
}

}  // namespace sensorplace
