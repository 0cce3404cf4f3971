#pragma once

#include "bibd/design.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bibd {

/// z_j = number of blocks meeting a probe set of size m in exactly j points,
/// j = 0..k. Always stored at full length k+1.
class IntersectionProfile {
public:
    IntersectionProfile(std::vector<std::int64_t> counts, int probe_size);

    std::span<const std::int64_t> counts() const { return counts_; }
    /// Block size of the profiled family (length - 1).
    int block_size() const { return static_cast<int>(counts_.size()) - 1; }
    int probe_size() const { return m_; }
    /// z_j, or 0 beyond the stored length.
    std::int64_t operator[](int j) const;
    std::int64_t total() const;

    /// "(z_0,...,z_t)" with t = min(k, m).
    std::string to_string() const;

    friend bool operator==(const IntersectionProfile&, const IntersectionProfile&) = default;

private:
    std::vector<std::int64_t> counts_;
    int m_;
};

/// Profile of `f` against probe set `probe`. Throws std::invalid_argument if
/// the probe leaves the ground set.
IntersectionProfile profile(const BlockFamily& f, Block probe);

/// Writes the profile counts into `out` (length f.k()+1) without allocating.
void profile_into(std::span<const Block> blocks, Block probe, std::span<std::int64_t> out);

/// Sum z_j = b, sum j z_j = r m, sum j^2 z_j = m(lambda m - lambda + r).
bool check_moment_identities(const IntersectionProfile& p, const DesignParams& params);

enum class SelfFriendCase {
    none,
    unit_lambda,   ///< lambda = 1
    triple_blocks, ///< k = 3
    symmetric,     ///< b = v
};

std::string to_string(SelfFriendCase c);

/// First of lambda = 1, k = 3, b = v that holds, or none.
SelfFriendCase self_friend_case(const DesignParams& params);

/// The self-profile (probe = any block) forced by the parameters when one of
/// the three self-friendship cases applies; nothing otherwise or when the
/// parameters are not admissible.
std::optional<IntersectionProfile> theoretical_self_profile(const DesignParams& params);

/// z_i = C(k,i) C(v-k,k-i). Requires 1 <= k <= v-1.
IntersectionProfile full_design_self_profile(int v, int k);

struct PenultimateProfiles {
    /// Profile of the design against a (v-1)-subset: z_{k-1} = r, z_k = b - r.
    IntersectionProfile design_side;
    /// Profile of the full design of (v-1)-subsets against a design block:
    /// w_{k-1} = k, w_k = v - k.
    IntersectionProfile full_side;
};

/// Requires k < v-1.
PenultimateProfiles penultimate_full_profiles(const DesignParams& params);

} // namespace bibd
