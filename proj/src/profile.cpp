#include "bibd/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bibd {

IntersectionProfile::IntersectionProfile(std::vector<std::int64_t> counts, int probe_size)
    : counts_(std::move(counts)), m_(probe_size)
{
    if (counts_.empty()) {
        throw std::invalid_argument("profile needs at least one entry");
    }
    if (m_ < 0) {
        throw std::invalid_argument("negative probe size");
    }
}

std::int64_t IntersectionProfile::operator[](int j) const
{
    if (j < 0 || j >= static_cast<int>(counts_.size())) {
        return 0;
    }
    return counts_[static_cast<std::size_t>(j)];
}

std::int64_t IntersectionProfile::total() const
{
    return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

std::string IntersectionProfile::to_string() const
{
    const int last = std::min(block_size(), m_);
    std::string out = "(";
    for (int j = 0; j <= last; ++j) {
        if (j > 0) {
            out += ',';
        }
        out += std::to_string(counts_[static_cast<std::size_t>(j)]);
    }
    out += ')';
    return out;
}

void profile_into(std::span<const Block> blocks, Block probe, std::span<std::int64_t> out)
{
    std::fill(out.begin(), out.end(), 0);
    for (Block blk : blocks) {
        ++out[static_cast<std::size_t>(blk.intersection_size(probe))];
    }
}

IntersectionProfile profile(const BlockFamily& f, Block probe)
{
    if (!f.ground().contains(probe)) {
        throw std::invalid_argument("probe " + probe.to_set_string() + " leaves the ground set of size " +
                                    std::to_string(f.v()));
    }
    std::vector<std::int64_t> z(static_cast<std::size_t>(f.k()) + 1, 0);
    profile_into(f.blocks(), probe, z);
    return IntersectionProfile(std::move(z), probe.size());
}

bool check_moment_identities(const IntersectionProfile& p, const DesignParams& params)
{
    const std::int64_t m = p.probe_size();
    const std::int64_t r = params.r;
    const std::int64_t lambda = params.lambda;
    std::int64_t s0 = 0, s1 = 0, s2 = 0;
    for (int j = 0; j <= p.block_size(); ++j) {
        s0 += p[j];
        s1 += j * p[j];
        s2 += std::int64_t{j} * j * p[j];
    }
    return s0 == params.b && s1 == r * m && s2 == m * (lambda * m - lambda + r);
}

std::string to_string(SelfFriendCase c)
{
    switch (c) {
    case SelfFriendCase::unit_lambda:
        return "lambda=1";
    case SelfFriendCase::triple_blocks:
        return "k=3";
    case SelfFriendCase::symmetric:
        return "symmetric";
    case SelfFriendCase::none:
        break;
    }
    return "none";
}

SelfFriendCase self_friend_case(const DesignParams& p)
{
    if (!admissible(p)) {
        return SelfFriendCase::none;
    }
    if (p.lambda == 1) {
        return SelfFriendCase::unit_lambda;
    }
    if (p.k == 3) {
        return SelfFriendCase::triple_blocks;
    }
    if (p.b == p.v) {
        return SelfFriendCase::symmetric;
    }
    return SelfFriendCase::none;
}

std::optional<IntersectionProfile> theoretical_self_profile(const DesignParams& p)
{
    const auto which = self_friend_case(p);
    if (which == SelfFriendCase::none) {
        return std::nullopt;
    }
    const std::int64_t b = p.b, r = p.r, k = p.k, lambda = p.lambda;
    std::vector<std::int64_t> z(static_cast<std::size_t>(k) + 1, 0);
    switch (which) {
    case SelfFriendCase::unit_lambda:
        // Two blocks share at most one point; the probe meets itself in k.
        z[static_cast<std::size_t>(k)] += 1;
        if (k >= 2) {
            z[1] += k * (r - 1);
            z[0] += b - 1 - k * (r - 1);
        } else {
            z[0] += b - 1;
        }
        break;
    case SelfFriendCase::triple_blocks:
        z[3] = 1;
        z[2] = 3 * (lambda - 1);
        z[1] = 3 * (r - 2 * lambda + 1);
        z[0] = b - 3 * r + 3 * lambda - 1;
        break;
    case SelfFriendCase::symmetric:
        // Distinct blocks of a symmetric design meet in lambda points.
        z[static_cast<std::size_t>(lambda)] += b - 1;
        z[static_cast<std::size_t>(k)] += 1;
        break;
    case SelfFriendCase::none:
        break;
    }
    return IntersectionProfile(std::move(z), p.k);
}

IntersectionProfile full_design_self_profile(int v, int k)
{
    if (k < 1 || k > v - 1) {
        throw std::invalid_argument("full_design_self_profile needs 1 <= k <= v-1");
    }
    std::vector<std::int64_t> z(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i <= k; ++i) {
        z[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(binomial(k, i) * binomial(v - k, k - i));
    }
    return IntersectionProfile(std::move(z), k);
}

PenultimateProfiles penultimate_full_profiles(const DesignParams& p)
{
    if (p.k < 1 || p.k >= p.v - 1) {
        throw std::invalid_argument("penultimate_full_profiles needs 1 <= k < v-1");
    }
    std::vector<std::int64_t> z(static_cast<std::size_t>(p.k) + 1, 0);
    z[static_cast<std::size_t>(p.k - 1)] = p.r;
    z[static_cast<std::size_t>(p.k)] = p.b - p.r;

    std::vector<std::int64_t> w(static_cast<std::size_t>(p.v), 0);
    w[static_cast<std::size_t>(p.k - 1)] = p.k;
    w[static_cast<std::size_t>(p.k)] = p.v - p.k;

    return PenultimateProfiles{IntersectionProfile(std::move(z), p.v - 1), IntersectionProfile(std::move(w), p.k)};
}

} // namespace bibd
