#pragma once

#include <optional>
#include <stdexcept>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sensorplace/model.hpp"

namespace sensorplace {

enum class MajorizationVerdict { StrictlyAbove, StrictlyBelow, Equal, Incomparable };

/// Single-letter code used in the comparability matrix: A, B, E, I.
char verdict_code(MajorizationVerdict v);
std::string_view verdict_name(MajorizationVerdict v);

/// Majorization comparison of two count lists with equal totals. Shorter
/// lists are zero-padded. StrictlyAbove means x majorizes y (x is more
/// concentrated). Throws std::invalid_argument on unequal totals.
MajorizationVerdict compare(std::span<const int> x, std::span<const int> y);
MajorizationVerdict compare(const Placement& x, const Placement& y);

struct ChainCheck {
    bool is_chain = true;
    /// First incomparable pair found, in input order.
    std::optional<std::pair<Placement, Placement>> offending;
};

ChainCheck is_chain(std::span<const Placement> set);

/// Totally ordered chain of placements, most concentrated first.
class PlacementScale {
public:
    PlacementScale() = default;

    const std::vector<Placement>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    /// Position in the chain (0 = top), or nullopt if not a member.
    std::optional<std::size_t> index_of(const Placement& p) const;

    /// Majorization level: size()-1 for the top member, 0 for the bottom.
    std::optional<std::size_t> level_of(const Placement& p) const;

private:
    friend PlacementScale chain_sort(std::span<const Placement>);
    std::vector<Placement> members_;
};

/// Orders a chain from most to least concentrated. Throws
/// NotAChainError when two members are incomparable.
PlacementScale chain_sort(std::span<const Placement> set);

class NotAChainError : public std::invalid_argument {
public:
    NotAChainError(Placement a, Placement b);
    const std::pair<Placement, Placement>& pair() const { return pair_; }

private:
    std::pair<Placement, Placement> pair_;
};

}  // namespace sensorplace
