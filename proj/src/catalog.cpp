#include "bibd/catalog.hpp"

#include "bibd/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace bibd {

namespace {

using Rows = std::vector<std::vector<int>>;

BlockDesign from_rows(int v, const Rows& rows)
{
    std::vector<Block> blocks;
    blocks.reserve(rows.size());
    for (const auto& row : rows) {
        blocks.push_back(Block::from_labels(row));
    }
    return BlockDesign(GroundSet(v), std::move(blocks));
}

const Rows& sts13_common()
{
    static const Rows rows = {
        {1, 2, 3},  {1, 4, 5},   {1, 6, 7},   {1, 8, 9},   {1, 10, 11}, {1, 12, 13}, {2, 4, 6},   {2, 5, 7},
        {2, 8, 10}, {2, 9, 12},  {2, 11, 13}, {4, 3, 8},   {4, 7, 9},   {4, 10, 13}, {4, 11, 12}, {7, 3, 11},
        {7, 8, 13}, {7, 10, 12}, {8, 5, 11},  {8, 6, 12},  {6, 9, 11},  {3, 5, 12},
    };
    return rows;
}

BlockDesign sts13_with(const Rows& tail)
{
    Rows rows = sts13_common();
    rows.insert(rows.end(), tail.begin(), tail.end());
    return from_rows(13, rows);
}

/// k-subsets of V that are not blocks of `d`.
BlockDesign remaining_subsets(const BlockDesign& d)
{
    std::unordered_set<std::uint64_t> taken;
    for (Block blk : d.blocks()) {
        taken.insert(blk.bits());
    }
    std::vector<Block> rest;
    for (Block s : all_subsets_lex(d.v(), d.k())) {
        if (!taken.contains(s.bits())) {
            rest.push_back(s);
        }
    }
    return BlockDesign(d.ground(), std::move(rest));
}

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> out;
    out.push_back({"fano", fano_plane(), "Fano plane, block list of the Fano/D5 friendship example"});
    out.push_back({"design_9_12_8_6_5", design_9_12_8_6_5(), "self-friendly (9,12,8,6,5) design, printed table"});
    out.push_back({"sts13_s1", sts13_s1(), "STS(13) S1, 22 shared blocks plus (3,6,10) (3,9,13) (5,6,13) (5,9,10)"});
    out.push_back({"sts13_s2", sts13_s2(), "STS(13) S2, 22 shared blocks plus (3,6,13) (3,9,10) (5,6,10) (5,9,13)"});
    out.push_back({"pg2_3", projective_plane(prime_field(3)), "PG(2,3) built over GF(3)"});
    for (auto& member : fano_family()) {
        std::string name = member.name;
        std::replace(name.begin(), name.end(), '\'', 'p');
        out.push_back({"fano_family." + name, std::move(member.design), "member " + member.name +
                                                                             " of the ten-member Fano friendly family"});
    }
    return out;
}

} // namespace

BlockDesign fano_plane()
{
    return from_rows(7, {{2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}, {1, 2, 4}});
}

BlockDesign design_9_12_8_6_5()
{
    return from_rows(9, {
                            {1, 2, 4, 5, 7, 8},
                            {2, 3, 5, 6, 8, 9},
                            {1, 3, 4, 6, 7, 9},
                            {1, 3, 5, 6, 7, 8},
                            {1, 2, 4, 6, 8, 9},
                            {2, 3, 4, 5, 7, 9},
                            {1, 2, 5, 6, 7, 9},
                            {1, 3, 4, 5, 8, 9},
                            {2, 3, 4, 6, 7, 8},
                            {4, 5, 6, 7, 8, 9},
                            {1, 2, 3, 4, 5, 6},
                            {1, 2, 3, 7, 8, 9},
                        });
}

BlockDesign sts13_s1()
{
    return sts13_with({{3, 6, 10}, {3, 9, 13}, {5, 6, 13}, {5, 9, 10}});
}

BlockDesign sts13_s2()
{
    return sts13_with({{3, 6, 13}, {3, 9, 10}, {5, 6, 10}, {5, 9, 13}});
}

std::vector<NamedDesign> fano_family()
{
    const auto plane = fano_plane();
    const auto line_complements = complement_design(plane);
    return {
        {"D0", full_design(7, 0)},
        {"D1", full_design(7, 1)},
        {"D2", full_design(7, 2)},
        {"P3", plane},
        {"D3'", remaining_subsets(plane)},
        {"D4", line_complements},
        {"D4'", remaining_subsets(line_complements)},
        {"D5", full_design(7, 5)},
        {"D6", full_design(7, 6)},
        {"D7", full_design(7, 7)},
    };
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(std::string_view name)
{
    for (const auto& entry : catalog()) {
        if (entry.name == name) {
            return entry;
        }
    }
    throw std::out_of_range("no catalog entry named '" + std::string(name) + "'");
}

} // namespace bibd
