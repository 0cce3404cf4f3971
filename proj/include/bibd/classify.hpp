#pragma once

#include "bibd/design.hpp"
#include "bibd/profile.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bibd {

/// All n-subsets of V sharing one intersection signature against the parent.
struct SubsetClass {
    int n = 0;
    IntersectionProfile signature{{0}, 0};
    std::uint64_t count = 0;
    /// Lexicographic; empty when members were not retained.
    std::vector<Block> members;
    /// Detection verdict on the members (degenerate levels 0 and v count as
    /// designs). Unset when members were not retained.
    std::optional<DesignParams> design_verdict;
    std::string design_witness;

    /// The members as a block family. Requires retained members.
    BlockFamily family(GroundSet ground) const;
};

struct ClassifyOptions {
    /// 0 = all cores. Results never depend on it.
    int threads = 0;
    bool retain_members = true;
    /// Build levels above v/2 by complementing level v-n instead of sweeping.
    bool derive_complements = false;
    /// With derive_complements: also sweep those levels and compare.
    bool cross_check = false;
    /// classify_all refuses larger ground sets.
    int sweep_limit = 24;
};

/// Groups the C(v,n) n-subsets by exact signature. Classes are sorted by
/// signature (lexicographic on the full vector).
std::vector<SubsetClass> classify_level(const BlockFamily& parent, int n, const ClassifyOptions& options = {});

struct Subdivision {
    BlockFamily parent;
    /// levels[n] for n = 0..v.
    std::vector<std::vector<SubsetClass>> levels;

    std::size_t class_count() const;
};

/// Every level 0..v. Signatures of level v-n are checked against the
/// reversed signatures of level n. Throws std::invalid_argument when v
/// exceeds options.sweep_limit.
Subdivision classify_all(const BlockFamily& parent, const ClassifyOptions& options = {});

/// Position of a class inside a Subdivision.
struct ClassRef {
    int level = 0;
    std::size_t index = 0;
};

struct SubdivisionReport {
    /// Level-major order; every other vector is indexed the same way.
    std::vector<ClassRef> classes;
    std::vector<char> is_design;
    std::vector<char> self_friend;
    std::vector<char> friends_with_parent;
    /// friends[i][j] over all classes, symmetric, diagonal = self_friend.
    std::vector<std::vector<char>> friends;

    /// Per level: every class a design / distinct classes pairwise friends.
    std::vector<char> level_all_designs;
    std::vector<char> level_friendly;

    bool all_designs = false;
    /// Distinct classes pairwise friends across all levels.
    bool friendly = false;
    bool all_self_friends = false;
    /// Classes are disjoint and cover all 2^v subsets.
    bool alpha_hypotheses = false;
    /// Every class is a design and the whole subdivision is friendly.
    bool conjecture_holds = false;
};

/// Requires retained members.
SubdivisionReport analyze(const Subdivision& sub, int threads = 0);

/// A class built from its closed-form description and checked against the
/// exhaustive classification.
struct TheoremClass {
    std::string description;
    std::vector<Block> members;
    DesignParams predicted;
    std::optional<DesignParams> detected;
    /// Same member set as one class of classify_level.
    bool matches_exhaustive = false;
    bool friends_with_parent = false;
    /// z_3 of phi(class, parent block) and of phi(parent, class block).
    std::int64_t class_anchor = 0;
    std::int64_t parent_anchor = 0;

    bool holds() const { return detected == predicted && matches_exhaustive && friends_with_parent; }
};

/// Parent with k = 3: the parent itself and all other triples.
/// Throws std::invalid_argument when k != 3.
std::array<TheoremClass, 2> theorem_k3_classes(const BlockDesign& parent, int threads = 0);

/// Parent with k = 3, lambda = 1: 4-subsets containing a block, and the rest.
/// Throws std::invalid_argument otherwise.
std::array<TheoremClass, 2> theorem_k4_classes(const BlockDesign& parent, int threads = 0);

} // namespace bibd
