#pragma once

#include "bibd/design.hpp"
#include "bibd/profile.hpp"

#include <cstddef>
#include <optional>

namespace bibd {

/// Which family is being profiled when a witness is found.
enum class ProbeSide {
    /// Profiles of the first family against blocks of the second differ.
    first_against_second,
    /// Profiles of the second family against blocks of the first differ.
    second_against_first,
};

/// Two probe blocks (indices into the probing family) with different profiles.
struct FriendshipWitness {
    ProbeSide side;
    std::size_t block_a;
    std::size_t block_b;
    IntersectionProfile profile_a;
    IntersectionProfile profile_b;

    std::string to_string() const;
};

struct FriendshipVerdict {
    bool friends = false;
    /// Common profile of the first family against any block of the second.
    std::optional<IntersectionProfile> profile_1_2;
    /// Common profile of the second family against any block of the first.
    std::optional<IntersectionProfile> profile_2_1;
    /// Present iff !friends.
    std::optional<FriendshipWitness> witness;
    /// Inputs that fail the BIBD axioms are still compared, but flagged.
    bool first_is_design = true;
    bool second_is_design = true;
    /// Set by is_self_friend when a closed-form case decided the verdict.
    SelfFriendCase theorem_case = SelfFriendCase::none;
};

/// The common profile of `probed` against every block of `probes`, or the
/// first pair of probe blocks that disagree.
struct CommonProfile {
    std::optional<IntersectionProfile> profile;
    std::size_t block_a = 0;
    std::size_t block_b = 0;
    std::optional<IntersectionProfile> profile_b;
};
CommonProfile common_profile(const BlockFamily& probed, const BlockFamily& probes);

/// Brute force over all b1*b2 block pairs with early exit. Throws
/// std::invalid_argument on a ground-set mismatch.
FriendshipVerdict are_friends(const BlockFamily& a, const BlockFamily& b);

/// b2 * phi(D1,D2)_j == b1 * phi(D2,D1)_j for every j (zero-extended).
bool check_count_identity(const FriendshipVerdict& verdict, std::int64_t b1, std::int64_t b2);

/// omega_i = z_{kD - i}. Throws std::invalid_argument unless z has length kD+1.
IntersectionProfile complement_transfer(const IntersectionProfile& z, int kD);

/// Profile of `d` against the blocks of complement(d1), assuming d and d1 are
/// friends. Inside the regime kD < min(k1, v-k1) the result is the reversal
/// of phi(d, d1); outside it is recomputed by brute force. Returns nothing
/// when d and d1 are not friends.
std::optional<IntersectionProfile> profile_against_complement(const BlockFamily& d, const BlockFamily& d1);

/// Short-circuits through theoretical_self_profile when lambda = 1, k = 3 or
/// b = v; brute force otherwise. With `verify` set the short-circuit is
/// checked against brute force and a mismatch throws std::logic_error.
FriendshipVerdict is_self_friend(const BlockDesign& d, bool verify = false);

/// True iff d1 and d2 are both friends with the full design of (v-1)-subsets
/// but not with each other. Both need k < v-1; throws std::invalid_argument
/// otherwise.
bool transitivity_counterexample(int v, const BlockFamily& d1, const BlockFamily& d2);

} // namespace bibd
