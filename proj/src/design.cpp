#include "bibd/design.hpp"

#include "bibd/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bibd {

std::string DesignParams::to_string() const
{
    return "(" + std::to_string(v) + "," + std::to_string(b) + "," + std::to_string(r) + "," +
           std::to_string(k) + "," + std::to_string(lambda) + ")";
}

bool admissible(const DesignParams& p)
{
    if (p.v < 1 || p.b < 1 || p.r < 1 || p.k < 1 || p.k > p.v || p.lambda < 0) {
        return false;
    }
    if (p.lambda == 0 && p.k != 1) {
        return false;
    }
    const long long v = p.v, b = p.b, r = p.r, k = p.k, lambda = p.lambda;
    return b * k == v * r && r * (k - 1) == lambda * (v - 1);
}

DesignDetection detect_design(std::span<const Block> blocks, int v)
{
    const GroundSet ground(v);
    {
        std::unordered_set<std::uint64_t> seen;
        seen.reserve(blocks.size());
        for (Block blk : blocks) {
            if (!ground.contains(blk)) {
                throw std::invalid_argument("block " + blk.to_set_string() + " has a label above v=" +
                                            std::to_string(v));
            }
            if (!seen.insert(blk.bits()).second) {
                throw AxiomError("duplicate block " + blk.to_set_string());
            }
        }
    }

    DesignDetection out;
    if (blocks.empty()) {
        out.witness = "no blocks";
        return out;
    }
    const int k = blocks.front().size();
    for (Block blk : blocks) {
        if (blk.size() != k) {
            out.witness = "block " + blocks.front().to_set_string() + " has size " + std::to_string(k) +
                          ", block " + blk.to_set_string() + " has size " + std::to_string(blk.size());
            return out;
        }
    }
    if (k == 0) {
        out.witness = "block size 0";
        return out;
    }

    std::vector<long long> replication(static_cast<std::size_t>(v), 0);
    std::vector<long long> pairs(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), 0);
    std::vector<int> labels;
    for (Block blk : blocks) {
        labels = blk.labels();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            ++replication[static_cast<std::size_t>(labels[i] - 1)];
            for (std::size_t j = i + 1; j < labels.size(); ++j) {
                ++pairs[static_cast<std::size_t>(labels[i] - 1) * static_cast<std::size_t>(v) +
                        static_cast<std::size_t>(labels[j] - 1)];
            }
        }
    }

    const long long r = replication[0];
    for (int x = 1; x < v; ++x) {
        if (replication[static_cast<std::size_t>(x)] != r) {
            out.witness = "element " + std::to_string(x + 1) + " in " +
                          std::to_string(replication[static_cast<std::size_t>(x)]) + " blocks, element 1 in " +
                          std::to_string(r);
            return out;
        }
    }

    long long lambda = 0;
    if (v >= 2) {
        lambda = pairs[1];
        for (int x = 0; x < v; ++x) {
            for (int y = x + 1; y < v; ++y) {
                const long long c = pairs[static_cast<std::size_t>(x) * static_cast<std::size_t>(v) +
                                          static_cast<std::size_t>(y)];
                if (c != lambda) {
                    out.witness = "pair {" + std::to_string(x + 1) + "," + std::to_string(y + 1) + "} in " +
                                  std::to_string(c) + " blocks, pair {1,2} in " + std::to_string(lambda);
                    return out;
                }
            }
        }
    }

    out.params = DesignParams{v, static_cast<int>(blocks.size()), static_cast<int>(r), k, static_cast<int>(lambda)};
    return out;
}

BlockFamily::BlockFamily(GroundSet ground, std::vector<Block> blocks)
    : ground_(ground), k_(0), blocks_(std::move(blocks))
{
    if (blocks_.empty()) {
        throw AxiomError("block family has no blocks");
    }
    k_ = blocks_.front().size();
    for (Block blk : blocks_) {
        if (blk.size() != k_) {
            throw AxiomError("mixed block sizes: " + blocks_.front().to_set_string() + " and " +
                             blk.to_set_string());
        }
    }
    auto detection = detect_design(blocks_, ground_.size());
    if (detection) {
        params_ = detection.params;
    } else if (k_ == 0) {
        params_ = DesignParams{v(), 1, 0, 0, 0};
    } else {
        witness_ = std::move(detection.witness);
    }
}

std::vector<Block> BlockFamily::sorted_blocks() const
{
    std::vector<Block> out(blocks_.begin(), blocks_.end());
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

bool operator==(const BlockFamily& a, const BlockFamily& b)
{
    if (a.ground_ != b.ground_ || a.blocks_.size() != b.blocks_.size()) {
        return false;
    }
    return a.sorted_blocks() == b.sorted_blocks();
}

namespace {

DesignKind kind_of(const BlockFamily& f)
{
    if (f.is_empty_set()) {
        return DesignKind::empty_set;
    }
    if (f.is_whole_set()) {
        return DesignKind::whole_set;
    }
    return DesignKind::proper;
}

} // namespace

BlockDesign::BlockDesign(BlockFamily family) : family_(std::move(family)), kind_(kind_of(family_))
{
    if (!family_.is_design()) {
        throw AxiomError("not a block design: " + family_.design_witness());
    }
}

BlockDesign::BlockDesign(GroundSet ground, std::vector<Block> blocks)
    : BlockDesign(BlockFamily(ground, std::move(blocks)))
{
}

BlockDesign BlockDesign::empty_set(int v)
{
    return BlockDesign(GroundSet(v), {Block{}});
}

BlockDesign BlockDesign::whole_set(int v)
{
    const GroundSet ground(v);
    return BlockDesign(ground, {ground.all()});
}

std::optional<BlockDesign> BlockDesign::try_from(BlockFamily family)
{
    if (!family.is_design()) {
        return std::nullopt;
    }
    return BlockDesign(std::move(family));
}

BlockDesign full_design(int v, int k)
{
    if (k < 0 || k > v) {
        throw std::invalid_argument("full design block size " + std::to_string(k) + " outside 0.." +
                                    std::to_string(v));
    }
    return BlockDesign(GroundSet(v), all_subsets_lex(v, k));
}

BlockFamily complement_family(const BlockFamily& f)
{
    std::vector<Block> out;
    out.reserve(f.blocks().size());
    for (Block blk : f.blocks()) {
        out.push_back(f.ground().complement(blk));
    }
    return BlockFamily(f.ground(), std::move(out));
}

BlockDesign complement_design(const BlockDesign& d)
{
    if (d.k() > d.v() - 1) {
        throw std::invalid_argument("complement_design needs k <= v-1");
    }
    return BlockDesign(complement_family(d.family()));
}

} // namespace bibd
