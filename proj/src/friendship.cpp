#include "bibd/friendship.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibd {

namespace {

void require_same_ground(const BlockFamily& a, const BlockFamily& b)
{
    if (a.ground() != b.ground()) {
        throw std::invalid_argument("ground-set mismatch: v=" + std::to_string(a.v()) + " vs v=" +
                                    std::to_string(b.v()));
    }
}

} // namespace

std::string FriendshipWitness::to_string() const
{
    const char* who = side == ProbeSide::first_against_second ? "first design against blocks of second"
                                                              : "second design against blocks of first";
    return std::string(who) + ": block #" + std::to_string(block_a + 1) + " gives " + profile_a.to_string() +
           ", block #" + std::to_string(block_b + 1) + " gives " + profile_b.to_string();
}

CommonProfile common_profile(const BlockFamily& probed, const BlockFamily& probes)
{
    const auto len = static_cast<std::size_t>(probed.k()) + 1;
    std::vector<std::int64_t> first(len), current(len);
    const auto probe_blocks = probes.blocks();
    profile_into(probed.blocks(), probe_blocks[0], first);

    CommonProfile out;
    for (std::size_t s = 1; s < probe_blocks.size(); ++s) {
        profile_into(probed.blocks(), probe_blocks[s], current);
        if (current != first) {
            out.block_a = 0;
            out.block_b = s;
            out.profile = IntersectionProfile(first, probes.k());
            out.profile_b = IntersectionProfile(current, probes.k());
            return out;
        }
    }
    out.profile = IntersectionProfile(std::move(first), probes.k());
    return out;
}

FriendshipVerdict are_friends(const BlockFamily& a, const BlockFamily& b)
{
    require_same_ground(a, b);
    FriendshipVerdict verdict;
    verdict.first_is_design = a.is_design();
    verdict.second_is_design = b.is_design();

    auto ab = common_profile(a, b);
    if (ab.profile_b) {
        verdict.witness = FriendshipWitness{ProbeSide::first_against_second, ab.block_a, ab.block_b,
                                            *ab.profile, *ab.profile_b};
        return verdict;
    }
    auto ba = common_profile(b, a);
    if (ba.profile_b) {
        verdict.witness = FriendshipWitness{ProbeSide::second_against_first, ba.block_a, ba.block_b,
                                            *ba.profile, *ba.profile_b};
        return verdict;
    }
    verdict.friends = true;
    verdict.profile_1_2 = std::move(ab.profile);
    verdict.profile_2_1 = std::move(ba.profile);
    return verdict;
}

bool check_count_identity(const FriendshipVerdict& verdict, std::int64_t b1, std::int64_t b2)
{
    if (!verdict.friends || !verdict.profile_1_2 || !verdict.profile_2_1) {
        return false;
    }
    const auto& p12 = *verdict.profile_1_2;
    const auto& p21 = *verdict.profile_2_1;
    const int top = std::max(p12.block_size(), p21.block_size());
    for (int j = 0; j <= top; ++j) {
        if (b2 * p12[j] != b1 * p21[j]) {
            return false;
        }
    }
    return true;
}

IntersectionProfile complement_transfer(const IntersectionProfile& z, int kD)
{
    if (z.block_size() != kD) {
        throw std::invalid_argument("complement_transfer: profile length " + std::to_string(z.block_size() + 1) +
                                    " does not match block size " + std::to_string(kD));
    }
    std::vector<std::int64_t> omega(z.counts().rbegin(), z.counts().rend());
    return IntersectionProfile(std::move(omega), z.probe_size());
}

std::optional<IntersectionProfile> profile_against_complement(const BlockFamily& d, const BlockFamily& d1)
{
    require_same_ground(d, d1);
    const auto verdict = are_friends(d, d1);
    if (!verdict.friends) {
        return std::nullopt;
    }
    const int k1 = d1.k();
    const int k2 = d1.v() - k1;
    if (d.k() < k1 && d.k() < k2) {
        auto omega = complement_transfer(*verdict.profile_1_2, d.k());
        return IntersectionProfile(std::vector<std::int64_t>(omega.counts().begin(), omega.counts().end()), k2);
    }
    const auto complement = complement_family(d1);
    const auto brute = common_profile(d, complement);
    if (brute.profile_b) {
        throw std::logic_error("complement of a friend is not a friend");
    }
    return brute.profile;
}

FriendshipVerdict is_self_friend(const BlockDesign& d, bool verify)
{
    const auto which = d.degenerate() ? SelfFriendCase::none : self_friend_case(d.params());
    if (which == SelfFriendCase::none) {
        return are_friends(d, d);
    }
    auto predicted = theoretical_self_profile(d.params());
    FriendshipVerdict verdict;
    verdict.friends = true;
    verdict.profile_1_2 = predicted;
    verdict.profile_2_1 = predicted;
    verdict.theorem_case = which;
    if (verify) {
        const auto brute = are_friends(d, d);
        if (!brute.friends || brute.profile_1_2 != predicted) {
            throw std::logic_error("self-friendship short-circuit (" + to_string(which) +
                                   ") disagrees with brute force for " + d.params().to_string());
        }
    }
    return verdict;
}

bool transitivity_counterexample(int v, const BlockFamily& d1, const BlockFamily& d2)
{
    require_same_ground(d1, d2);
    if (d1.v() != v) {
        throw std::invalid_argument("designs are not on a ground set of size " + std::to_string(v));
    }
    if (d1.k() >= v - 1 || d2.k() >= v - 1) {
        throw std::invalid_argument("transitivity_counterexample needs block sizes below v-1");
    }
    const auto penultimate = full_design(v, v - 1);
    return are_friends(d1, penultimate).friends && are_friends(d2, penultimate).friends &&
           !are_friends(d1, d2).friends;
}

} // namespace bibd
