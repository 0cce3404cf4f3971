#pragma once

#include "bibd/block.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bibd {

struct DesignParams {
    int v = 0;
    int b = 0;
    int r = 0;
    int k = 0;
    int lambda = 0;

    /// "(v,b,r,k,lambda)"
    std::string to_string() const;

    friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// bk = vr and r(k-1) = lambda(v-1), with 1 <= k <= v. lambda = 0 is only
/// accepted for k = 1 (singleton blocks have no pairs).
bool admissible(const DesignParams& p);

/// Result of checking a block list against the BIBD axioms.
struct DesignDetection {
    std::optional<DesignParams> params;
    /// Why the list is not a design; empty when it is.
    std::string witness;

    explicit operator bool() const { return params.has_value(); }
};

/// Checks uniform block size, constant replication and constant pair count.
/// Throws AxiomError on a duplicate block and std::invalid_argument on a
/// label outside 1..v; those are input errors, not verdicts.
DesignDetection detect_design(std::span<const Block> blocks, int v);

/// A simple block family over {1..v} whose blocks all have the same size.
/// This is the common currency for profiles and friendship: it need not be a
/// design. The detection verdict is computed once, at construction.
class BlockFamily {
public:
    /// Throws AxiomError for an empty list, a duplicate block or mixed block
    /// sizes; std::invalid_argument for a block outside the ground set.
    BlockFamily(GroundSet ground, std::vector<Block> blocks);

    GroundSet ground() const { return ground_; }
    int v() const { return ground_.size(); }
    int k() const { return k_; }
    int b() const { return static_cast<int>(blocks_.size()); }
    std::span<const Block> blocks() const { return blocks_; }

    /// Blocks in lexicographic order.
    std::vector<Block> sorted_blocks() const;

    bool is_empty_set() const { return k_ == 0; }
    bool is_whole_set() const { return k_ == v(); }

    /// Detected parameters. The degenerate family {empty set} reports
    /// (v,1,0,0,0); see BlockDesign.
    const std::optional<DesignParams>& design_params() const { return params_; }
    bool is_design() const { return params_.has_value(); }
    /// Empty when is_design().
    const std::string& design_witness() const { return witness_; }

    /// Same ground set and same set of blocks; order is ignored.
    friend bool operator==(const BlockFamily& a, const BlockFamily& b);

private:
    GroundSet ground_;
    int k_;
    std::vector<Block> blocks_;
    std::optional<DesignParams> params_;
    std::string witness_;
};

enum class DesignKind {
    proper,
    /// The degenerate design whose one block is the empty set.
    empty_set,
    /// The degenerate design whose one block is V.
    whole_set,
};

/// A block family that satisfies the BIBD axioms, or one of the two
/// degenerate designs.
class BlockDesign {
public:
    /// Throws AxiomError carrying the detection witness.
    explicit BlockDesign(BlockFamily family);
    BlockDesign(GroundSet ground, std::vector<Block> blocks);

    static BlockDesign empty_set(int v);
    static BlockDesign whole_set(int v);
    static std::optional<BlockDesign> try_from(BlockFamily family);

    const BlockFamily& family() const { return family_; }
    operator const BlockFamily&() const { return family_; }

    const DesignParams& params() const { return *family_.design_params(); }
    DesignKind kind() const { return kind_; }
    bool degenerate() const { return kind_ != DesignKind::proper; }

    GroundSet ground() const { return family_.ground(); }
    int v() const { return family_.v(); }
    int b() const { return family_.b(); }
    int k() const { return family_.k(); }
    std::span<const Block> blocks() const { return family_.blocks(); }

    friend bool operator==(const BlockDesign& a, const BlockDesign& b) { return a.family_ == b.family_; }

private:
    BlockFamily family_;
    DesignKind kind_;
};

/// All C(v,k) k-subsets in lexicographic order. k = 0 and k = v give the
/// degenerate designs. Throws std::invalid_argument for k outside 0..v.
BlockDesign full_design(int v, int k);

/// Block s of the result is V minus block s of d. Requires k <= v-1.
BlockDesign complement_design(const BlockDesign& d);

/// Same, for a raw family (the result need not be a design).
BlockFamily complement_family(const BlockFamily& f);

} // namespace bibd
