#include <doctest.h>

#include "bibd/catalog.hpp"
#include "bibd/family.hpp"

#include <algorithm>
#include <random>

using namespace bibd;

namespace {

std::size_t index_of(const FriendlyFamily& f, const std::string& name)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.member(i).name == name) {
            return i;
        }
    }
    FAIL("missing member " << name);
    return 0;
}

using NamePairs = std::vector<std::pair<std::string, std::string>>;

NamePairs named(const FriendlyFamily& f, const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
{
    NamePairs out;
    for (const auto& [i, j] : pairs) {
        out.emplace_back(f.member(i).name, f.member(j).name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("the ten-member Fano family")
{
    const auto f = FriendlyFamily::build(fano_family(), 2);
    REQUIRE(f.size() == 10);
    CHECK(f.blocks_disjoint());
    CHECK(f.total_blocks() == 128);
    CHECK(check_alpha_hypotheses(f));
    CHECK(check_order_preservation(f));

    const std::vector<std::string> order = {"D0", "D1", "D2", "D3'", "P3", "D4'", "D4", "D5", "D6", "D7"};
    for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(f.member(i).name == order[i]);
    }
    CHECK(f.label(index_of(f, "P3")) == "P3 (7,7,3,3,1)");
    CHECK(f.label(index_of(f, "D3'")) == "D3' (7,28,12,3,4)");
    CHECK(f.label(index_of(f, "D4'")) == "D4' (7,28,16,4,8)");

    const auto rel = order_relation(f);
    CHECK(rel.transitive);
    CHECK(rel.closure_antisymmetric);
    CHECK_FALSE(less_than(f, index_of(f, "P3"), index_of(f, "D4")));
    CHECK(less_than(f, index_of(f, "P3"), index_of(f, "D4'")));
    CHECK(rel.contains(index_of(f, "D2"), index_of(f, "D7")));
    CHECK_FALSE(rel.contains(index_of(f, "D7"), index_of(f, "D2")));

    NamePairs covers = named(f, transitive_reduction(rel));
    const NamePairs expected = {
        {"D0", "D1"}, {"D1", "D2"},  {"D2", "D3'"}, {"D2", "P3"},  {"D3'", "D4"}, {"D3'", "D4'"},
        {"D4", "D5"}, {"D4'", "D5"}, {"D5", "D6"},  {"D6", "D7"},  {"P3", "D4'"},
    };
    CHECK(covers == expected);
}

TEST_CASE("profiles cached by the family")
{
    const auto f = FriendlyFamily::build(fano_family(), 1);
    const auto p3 = index_of(f, "P3");
    const auto d4 = index_of(f, "D4");
    CHECK(f.profile(p3, d4).to_string() == "(1,0,6,0)");
    CHECK(f.profile(index_of(f, "D5"), p3).to_string() == "(0,3,12,6)");
    CHECK_THROWS_AS(f.profile(p3, p3), std::invalid_argument);
    CHECK_THROWS_AS(f.profile(p3, 99), std::out_of_range);
}

TEST_CASE("alpha maps a subset to the member owning it")
{
    const auto f = FriendlyFamily::build(fano_family(), 1);
    CHECK(f.member(alpha(f, Block{})).name == "D0");
    CHECK(f.member(alpha(f, Block::from_labels({2, 3, 5}))).name == "P3");
    CHECK(f.member(alpha(f, Block::from_labels({1, 2, 3}))).name == "D3'");
    CHECK(f.member(alpha(f, Block::from_labels({1, 3, 5, 6}))).name == "D4'");
    CHECK(f.member(alpha(f, GroundSet(7).all())).name == "D7");
}

TEST_CASE("build is insensitive to input order")
{
    const auto reference = FriendlyFamily::build(fano_family(), 1);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        auto designs = fano_family();
        std::shuffle(designs.begin(), designs.end(), rng);
        const auto f = FriendlyFamily::build(designs, 1 + trial % 3);
        REQUIRE(f.size() == reference.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f.member(i).name == reference.member(i).name);
        }
        CHECK(order_relation(f).pairs == order_relation(reference).pairs);
        CHECK(export_hasse(order_relation(f)) == export_hasse(order_relation(reference)));
    }
}

TEST_CASE("families that are not friendly or incomplete")
{
    std::vector<NamedDesign> bad = {{"S1", sts13_s1()}, {"S2", sts13_s2()}};
    try {
        FriendlyFamily::build(bad);
        FAIL("expected a FamilyError");
    } catch (const FamilyError& e) {
        CHECK(e.first() == "S1");
        CHECK(e.second() == "S2");
    }
    CHECK_THROWS_AS(FriendlyFamily::build({}), std::invalid_argument);
    CHECK_THROWS_AS(FriendlyFamily::build({{"a", fano_plane()}, {"b", full_design(8, 2)}}), std::invalid_argument);

    const auto partial = FriendlyFamily::build({{"P", fano_plane()}, {"D5", full_design(7, 5)}});
    CHECK_FALSE(check_alpha_hypotheses(partial));
    CHECK_THROWS_AS(alpha(partial, Block::from_labels({1})), std::logic_error);
    CHECK_THROWS_AS(check_order_preservation(partial), std::logic_error);

    const auto overlap = FriendlyFamily::build({{"P", fano_plane()}, {"Q", fano_plane()}});
    CHECK_FALSE(overlap.blocks_disjoint());
}

TEST_CASE("transitive reduction rejects a cycle")
{
    OrderRelation rel;
    rel.labels = {"a", "b", "c"};
    rel.pairs = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(transitive_reduction(rel), Error);

    rel.pairs = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(transitive_reduction(rel) == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});
}

TEST_CASE("Hasse diagram export")
{
    const auto f = FriendlyFamily::build(fano_family(), 1);
    const auto dot = export_hasse(order_relation(f));
    CHECK(dot.rfind("digraph hasse {\n  rankdir=BT;\n", 0) == 0);
    CHECK(dot.find("n4 [label=\"P3 (7,7,3,3,1)\"];") != std::string::npos);
    CHECK(dot.find("n2 -> n3;") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 11);
}
