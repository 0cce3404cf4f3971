#include "bibd/classify.hpp"

#include "bibd/friendship.hpp"
#include "bibd/parallel.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <span>
#include <stdexcept>
#include <unordered_set>

namespace bibd {

namespace {

using Signature = std::vector<std::int64_t>;

struct SignatureLess {
    using is_transparent = void;
    bool operator()(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

struct Accumulator {
    std::uint64_t count = 0;
    std::vector<Block> members;
};

using ClassMap = std::map<Signature, Accumulator, SignatureLess>;

void merge_into(ClassMap& into, ClassMap&& from)
{
    for (auto& [sig, acc] : from) {
        auto& dst = into[sig];
        dst.count += acc.count;
        dst.members.insert(dst.members.end(), acc.members.begin(), acc.members.end());
    }
}

void annotate(SubsetClass& cls, GroundSet ground)
{
    if (cls.members.empty()) {
        return;
    }
    const BlockFamily family(ground, cls.members);
    cls.design_verdict = family.design_params();
    cls.design_witness = family.design_witness();
}

std::vector<SubsetClass> finish(ClassMap&& map, int n, GroundSet ground, const ClassifyOptions& options)
{
    std::vector<SubsetClass> out;
    out.reserve(map.size());
    for (auto& [sig, acc] : map) {
        SubsetClass cls;
        cls.n = n;
        cls.signature = IntersectionProfile(sig, n);
        cls.count = acc.count;
        if (options.retain_members) {
            cls.members = std::move(acc.members);
            std::sort(cls.members.begin(), cls.members.end(), LexLess{});
        }
        out.push_back(std::move(cls));
    }
    // std::map already iterates in signature order
    parallel_for(out.size(), options.threads, [&](std::size_t i) { annotate(out[i], ground); });
    return out;
}

Signature reversed(const IntersectionProfile& p)
{
    return Signature(p.counts().rbegin(), p.counts().rend());
}

std::vector<SubsetClass> complement_level(const std::vector<SubsetClass>& mirror, int n, GroundSet ground,
                                          const ClassifyOptions& options)
{
    ClassMap map;
    for (const auto& cls : mirror) {
        auto& acc = map[reversed(cls.signature)];
        acc.count = cls.count;
        for (Block blk : cls.members) {
            acc.members.push_back(ground.complement(blk));
        }
    }
    return finish(std::move(map), n, ground, options);
}

bool same_level(const std::vector<SubsetClass>& a, const std::vector<SubsetClass>& b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].signature != b[i].signature || a[i].count != b[i].count || a[i].members != b[i].members) {
            return false;
        }
    }
    return true;
}

bool mirror_consistent(const std::vector<SubsetClass>& level, const std::vector<SubsetClass>& mirror)
{
    std::vector<std::pair<Signature, std::uint64_t>> a, b;
    for (const auto& cls : level) {
        a.emplace_back(Signature(cls.signature.counts().begin(), cls.signature.counts().end()), cls.count);
    }
    for (const auto& cls : mirror) {
        b.emplace_back(reversed(cls.signature), cls.count);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

} // namespace

BlockFamily SubsetClass::family(GroundSet ground) const
{
    if (members.empty()) {
        throw std::logic_error("class members were not retained");
    }
    return BlockFamily(ground, members);
}

std::vector<SubsetClass> classify_level(const BlockFamily& parent, int n, const ClassifyOptions& options)
{
    const int v = parent.v();
    if (n < 0 || n > v) {
        throw std::invalid_argument("level " + std::to_string(n) + " outside 0.." + std::to_string(v));
    }
    const std::uint64_t total = binomial(v, n);
    const auto workers = static_cast<std::uint64_t>(resolve_threads(options.threads));
    const std::uint64_t chunks = std::min<std::uint64_t>(total, workers * 4);
    const std::uint64_t chunk_size = (total + chunks - 1) / chunks;
    const auto len = static_cast<std::size_t>(parent.k()) + 1;
    const auto blocks = parent.blocks();

    ClassMap merged;
    std::mutex merge_mutex;
    parallel_for(static_cast<std::size_t>(chunks), options.threads, [&](std::size_t c) {
        const std::uint64_t first = c * chunk_size;
        if (first >= total) {
            return;
        }
        const std::uint64_t count = std::min(chunk_size, total - first);
        ClassMap local;
        std::array<std::int64_t, kMaxPoints + 1> buffer{};
        const std::span<std::int64_t> z(buffer.data(), len);
        for_each_subset_range(v, n, first, count, [&](Block s) {
            profile_into(blocks, s, z);
            auto it = local.find(std::span<const std::int64_t>(z));
            if (it == local.end()) {
                it = local.emplace(Signature(z.begin(), z.end()), Accumulator{}).first;
            }
            ++it->second.count;
            if (options.retain_members) {
                it->second.members.push_back(s);
            }
        });
        std::lock_guard lock(merge_mutex);
        merge_into(merged, std::move(local));
    });
    return finish(std::move(merged), n, parent.ground(), options);
}

std::size_t Subdivision::class_count() const
{
    std::size_t total = 0;
    for (const auto& level : levels) {
        total += level.size();
    }
    return total;
}

Subdivision classify_all(const BlockFamily& parent, const ClassifyOptions& options)
{
    const int v = parent.v();
    if (v > options.sweep_limit) {
        throw std::invalid_argument("v=" + std::to_string(v) + " exceeds the sweep limit " +
                                    std::to_string(options.sweep_limit) + "; classify single levels instead");
    }
    Subdivision sub{parent, std::vector<std::vector<SubsetClass>>(static_cast<std::size_t>(v) + 1)};
    for (int n = 0; n <= v; ++n) {
        const int mirror = v - n;
        if (options.derive_complements && n > mirror) {
            sub.levels[n] = complement_level(sub.levels[mirror], n, parent.ground(), options);
            if (options.cross_check && !same_level(sub.levels[n], classify_level(parent, n, options))) {
                throw std::logic_error("complemented level " + std::to_string(n) + " disagrees with the sweep");
            }
        } else {
            sub.levels[n] = classify_level(parent, n, options);
        }
    }
    for (int n = 0; n <= v; ++n) {
        if (!mirror_consistent(sub.levels[n], sub.levels[v - n])) {
            throw std::logic_error("level " + std::to_string(n) + " is not the reversal of level " +
                                   std::to_string(v - n));
        }
    }
    return sub;
}

SubdivisionReport analyze(const Subdivision& sub, int threads)
{
    SubdivisionReport report;
    const GroundSet ground = sub.parent.ground();
    const int v = ground.size();

    std::vector<BlockFamily> families;
    for (int n = 0; n <= v; ++n) {
        const auto& level = sub.levels.at(n);
        for (std::size_t i = 0; i < level.size(); ++i) {
            report.classes.push_back(ClassRef{n, i});
            families.push_back(level[i].family(ground));
            report.is_design.push_back(level[i].design_verdict.has_value() ? 1 : 0);
        }
    }
    const auto count = families.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i; j < count; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<char> verdicts(pairs.size(), 0);
    report.friends_with_parent.assign(count, 0);
    parallel_for(pairs.size() + count, threads, [&](std::size_t p) {
        if (p < pairs.size()) {
            verdicts[p] = are_friends(families[pairs[p].first], families[pairs[p].second]).friends ? 1 : 0;
        } else {
            const auto i = p - pairs.size();
            report.friends_with_parent[i] = are_friends(families[i], sub.parent).friends ? 1 : 0;
        }
    });

    report.friends.assign(count, std::vector<char>(count, 0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        report.friends[i][j] = verdicts[p];
        report.friends[j][i] = verdicts[p];
    }
    for (std::size_t i = 0; i < count; ++i) {
        report.self_friend.push_back(report.friends[i][i]);
    }

    report.level_all_designs.assign(static_cast<std::size_t>(v) + 1, 1);
    report.level_friendly.assign(static_cast<std::size_t>(v) + 1, 1);
    report.all_designs = true;
    report.friendly = true;
    report.all_self_friends = true;
    for (std::size_t i = 0; i < count; ++i) {
        const auto li = static_cast<std::size_t>(report.classes[i].level);
        if (!report.is_design[i]) {
            report.level_all_designs[li] = 0;
            report.all_designs = false;
        }
        if (!report.self_friend[i]) {
            report.all_self_friends = false;
        }
        for (std::size_t j = i + 1; j < count; ++j) {
            if (report.friends[i][j]) {
                continue;
            }
            report.friendly = false;
            if (report.classes[j].level == report.classes[i].level) {
                report.level_friendly[li] = 0;
            }
        }
    }

    // Classes at one level are disjoint by construction; levels differ in size.
    bool covers = v < 63;
    std::uint64_t total = 0;
    for (int n = 0; n <= v && covers; ++n) {
        std::uint64_t level_total = 0;
        for (const auto& cls : sub.levels[n]) {
            level_total += cls.count;
        }
        covers = level_total == binomial(v, n);
        total += level_total;
    }
    report.alpha_hypotheses = covers && total == (std::uint64_t{1} << v);
    report.conjecture_holds = report.all_designs && report.friendly;
    return report;
}

namespace {

TheoremClass make_theorem_class(std::string description, std::vector<Block> members, DesignParams predicted,
                                const BlockDesign& parent, const std::vector<SubsetClass>& exhaustive)
{
    TheoremClass out;
    out.description = std::move(description);
    std::sort(members.begin(), members.end(), LexLess{});
    out.members = std::move(members);
    out.predicted = predicted;
    if (out.members.empty()) {
        return out;
    }
    const BlockFamily family(parent.ground(), out.members);
    out.detected = family.design_params();
    out.matches_exhaustive = std::any_of(exhaustive.begin(), exhaustive.end(),
                                         [&](const SubsetClass& cls) { return cls.members == out.members; });
    const auto verdict = are_friends(family, parent);
    out.friends_with_parent = verdict.friends;
    const auto class_side = verdict.profile_1_2 ? *verdict.profile_1_2 : profile(family, parent.blocks()[0]);
    const auto parent_side = verdict.profile_2_1 ? *verdict.profile_2_1 : profile(parent, out.members[0]);
    out.class_anchor = class_side[3];
    out.parent_anchor = parent_side[3];
    return out;
}

int to_int(std::uint64_t x)
{
    return static_cast<int>(x);
}

} // namespace

std::array<TheoremClass, 2> theorem_k3_classes(const BlockDesign& parent, int threads)
{
    if (parent.k() != 3 || parent.degenerate()) {
        throw std::invalid_argument("theorem_k3_classes needs a parent with k = 3");
    }
    const auto& p = parent.params();
    const int v = p.v;
    std::unordered_set<std::uint64_t> blocks;
    for (Block blk : parent.blocks()) {
        blocks.insert(blk.bits());
    }
    std::vector<Block> others;
    for_each_subset(v, 3, [&](Block s) {
        if (!blocks.contains(s.bits())) {
            others.push_back(s);
        }
    });

    ClassifyOptions options;
    options.threads = threads;
    const auto exhaustive = classify_level(parent, 3, options);

    const DesignParams second{v, to_int(binomial(v, 3)) - p.b, to_int(binomial(v - 1, 2)) - p.r, 3, v - 2 - p.lambda};
    return {
        make_theorem_class("blocks of the parent", {parent.blocks().begin(), parent.blocks().end()}, p, parent,
                           exhaustive),
        make_theorem_class("triples that are not blocks", std::move(others), second, parent, exhaustive),
    };
}

std::array<TheoremClass, 2> theorem_k4_classes(const BlockDesign& parent, int threads)
{
    if (parent.k() != 3 || parent.degenerate() || parent.params().lambda != 1) {
        throw std::invalid_argument("theorem_k4_classes needs a parent with k = 3 and lambda = 1");
    }
    const auto& p = parent.params();
    const int v = p.v;
    std::vector<Block> containing, rest;
    for_each_subset(v, 4, [&](Block s) {
        const bool has_block = std::any_of(parent.blocks().begin(), parent.blocks().end(),
                                           [&](Block blk) { return blk.is_subset_of(s); });
        (has_block ? containing : rest).push_back(s);
    });

    ClassifyOptions options;
    options.threads = threads;
    const auto exhaustive = classify_level(parent, 4, options);

    const DesignParams first{v, p.b * (v - 3), p.r * (v - 3) + (p.b - p.r), 4, v - 3 + 2 * (p.r - 1)};
    const DesignParams second{v, to_int(binomial(v, 4)) - first.b, to_int(binomial(v - 1, 3)) - first.r, 4,
                              to_int(binomial(v - 2, 2)) - first.lambda};
    return {
        make_theorem_class("4-subsets containing a block", std::move(containing), first, parent, exhaustive),
        make_theorem_class("4-subsets containing no block", std::move(rest), second, parent, exhaustive),
    };
}

} // namespace bibd
