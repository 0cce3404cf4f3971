#include <doctest.h>

#include "bibd/catalog.hpp"
#include "bibd/design_io.hpp"
#include "bibd/error.hpp"
#include "bibd/field.hpp"
#include "bibd/friendship.hpp"

#include <set>

using namespace bibd;

namespace {

const char* const kGf4 = "q=4\n"
                         "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n"
                         "*\n"
                         "0 0 0 0\n0 1 2 3\n0 2 3 1\n0 3 1 2\n";

} // namespace

TEST_CASE("catalog designs have the expected parameters")
{
    CHECK(fano_plane().params() == DesignParams{7, 7, 3, 3, 1});
    CHECK(design_9_12_8_6_5().params() == DesignParams{9, 12, 8, 6, 5});
    CHECK(sts13_s1().params() == DesignParams{13, 26, 6, 3, 1});
    CHECK(sts13_s2().params() == DesignParams{13, 26, 6, 3, 1});
    CHECK_FALSE(sts13_s1() == sts13_s2());
    CHECK(fano_plane().blocks().front() == Block::from_labels({2, 3, 5}));
    CHECK(design_9_12_8_6_5().blocks().front() == Block::from_labels({1, 2, 4, 5, 7, 8}));

    std::set<std::string> names;
    for (const auto& e : catalog()) {
        CHECK(names.insert(e.name).second);
        CHECK_FALSE(e.provenance.empty());
    }
    CHECK(names.contains("fano_family.D3p"));
    CHECK(names.contains("pg2_3"));
    CHECK(catalog_entry("fano_family.D4p").design.params() == DesignParams{7, 28, 16, 4, 8});
    CHECK_THROWS_AS(catalog_entry("nope"), std::out_of_range);
}

TEST_CASE("the two STS(13) differ in four blocks")
{
    const auto a = sts13_s1().family().sorted_blocks();
    const auto b = sts13_s2().family().sorted_blocks();
    std::set<std::uint64_t> sa, sb;
    for (Block x : a) {
        sa.insert(x.bits());
    }
    for (Block x : b) {
        sb.insert(x.bits());
    }
    int shared = 0;
    for (auto x : sa) {
        shared += sb.contains(x) ? 1 : 0;
    }
    CHECK(shared == 22);
}

TEST_CASE("prime fields")
{
    const auto f5 = prime_field(5);
    CHECK(f5.order() == 5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK_THROWS_AS(prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(prime_field(67), std::invalid_argument);
    CHECK(load_field_tables(f5.to_text()) == f5);
}

TEST_CASE("field tables from text")
{
    const auto gf4 = load_field_tables(kGf4);
    CHECK(gf4.order() == 4);
    CHECK(gf4.mul(2, 2) == 3);
    CHECK(load_field_tables(gf4.to_text()) == gf4);

    // Z/4 is a ring without inverses.
    CHECK_THROWS_AS(load_field_tables("q=4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n*\n"
                                      "0 0 0 0\n0 1 2 3\n0 2 0 2\n0 3 2 1\n"),
                    AxiomError);
    CHECK_THROWS_AS(FieldTables(2, {0, 1, 1, 0}, {0, 0, 0, 0}), AxiomError);
    CHECK_THROWS_AS(FieldTables(2, {0, 1, 1, 2}, {0, 0, 0, 1}), AxiomError);
    CHECK_THROWS_AS(load_field_tables("0 1\n"), ParseError);
    CHECK_THROWS_AS(load_field_tables("q=2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(load_field_tables("q=2\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(load_field_tables("q=2\n0 x\n"), ParseError);
    CHECK_THROWS_AS(load_field_tables("q=2\n0 1\n1 0\n*\n0 0\n0 1\n*\n"), ParseError);
}

TEST_CASE("projective planes")
{
    const auto pg2 = projective_plane(prime_field(2));
    CHECK(pg2.params() == DesignParams{7, 7, 3, 3, 1});
    CHECK(pg2.blocks().front() == Block::from_labels({2, 4, 6}));
    CHECK(projective_plane(prime_field(3)).params() == DesignParams{13, 13, 4, 4, 1});
    CHECK(projective_plane(load_field_tables(kGf4)).params() == DesignParams{21, 21, 5, 5, 1});
    CHECK(projective_plane(prime_field(5)).params() == DesignParams{31, 31, 6, 6, 1});
    CHECK(projective_plane(prime_field(7)).params() == DesignParams{57, 57, 8, 8, 1});
    CHECK_THROWS_AS(projective_plane(prime_field(11)), std::invalid_argument);
    CHECK(is_self_friend(projective_plane(prime_field(5)), true).friends);
}

TEST_CASE("catalog entries survive a file round-trip")
{
    for (const auto& e : catalog()) {
        CAPTURE(e.name);
        CHECK(load_design(save_design(e.design, e.provenance)) == e.design);
    }
}
