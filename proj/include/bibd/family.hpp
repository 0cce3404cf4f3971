#pragma once

#include "bibd/design.hpp"
#include "bibd/error.hpp"
#include "bibd/profile.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bibd {

struct NamedDesign {
    std::string name;
    BlockDesign design;
};

/// Raised by FriendlyFamily::build when two members are not friends.
class FamilyError : public Error {
public:
    FamilyError(const std::string& what, std::string first, std::string second)
        : Error(what), first_(std::move(first)), second_(std::move(second))
    {
    }
    const std::string& first() const { return first_; }
    const std::string& second() const { return second_; }

private:
    std::string first_;
    std::string second_;
};

/// Designs on one ground set that are pairwise friends, in canonical order:
/// ascending block size, then lexicographic by sorted block list.
class FriendlyFamily {
public:
    /// Verifies every pair (in parallel) and caches the mutual profiles.
    /// Throws FamilyError naming the first failing pair in canonical order,
    /// std::invalid_argument on a ground-set mismatch or an empty list.
    static FriendlyFamily build(std::vector<NamedDesign> designs, int threads = 0);

    GroundSet ground() const { return ground_; }
    std::size_t size() const { return members_.size(); }
    const NamedDesign& member(std::size_t i) const { return members_.at(i); }
    const std::vector<NamedDesign>& members() const { return members_; }

    /// phi(D_i, D_j) for i != j.
    const IntersectionProfile& profile(std::size_t i, std::size_t j) const;

    /// Member whose block set contains `u` (the first one if several do).
    std::optional<std::size_t> owner(Block u) const;
    /// No block is shared between two members.
    bool blocks_disjoint() const { return blocks_disjoint_; }
    std::size_t total_blocks() const { return owners_.size(); }

    /// "name (v,b,r,k,lambda)"
    std::string label(std::size_t i) const;

private:
    FriendlyFamily(GroundSet ground) : ground_(ground) {}

    GroundSet ground_;
    std::vector<NamedDesign> members_;
    std::vector<std::optional<IntersectionProfile>> profiles_;
    std::unordered_map<std::uint64_t, std::size_t> owners_;
    bool blocks_disjoint_ = true;
};

/// D_i < D_j iff k_i < k_j and z_{k_i} of phi(D_i, D_j) is positive.
/// Throws std::out_of_range for a bad index.
bool less_than(const FriendlyFamily& f, std::size_t i, std::size_t j);

struct OrderRelation {
    std::vector<std::string> labels;
    /// (i, j) with D_i < D_j, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    /// The relation is transitive as it stands (checked on the family).
    bool transitive = false;
    /// Its transitive closure has no pair in both directions.
    bool closure_antisymmetric = false;

    bool contains(std::size_t i, std::size_t j) const;
};

OrderRelation order_relation(const FriendlyFamily& f);

/// Members' block sets are pairwise disjoint and cover all 2^v subsets.
bool check_alpha_hypotheses(const FriendlyFamily& f);

/// Index of the member having `u` as a block. Throws std::logic_error when
/// the family fails check_alpha_hypotheses.
std::size_t alpha(const FriendlyFamily& f, Block u);

/// X proper subset of Y implies alpha(X) < alpha(Y), over every comparable
/// pair of subsets. Throws std::invalid_argument for v > 16 and
/// std::logic_error when the alpha hypotheses fail.
bool check_order_preservation(const FriendlyFamily& f);

/// Covering pairs of the transitive closure of `rel`, sorted. Throws Error
/// naming a cycle if the closure is not a partial order.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const OrderRelation& rel);

/// Hasse diagram as a DOT digraph.
std::string export_hasse(const OrderRelation& rel);

} // namespace bibd
