#include <doctest.h>

#include "bibd/catalog.hpp"
#include "bibd/classify.hpp"
#include "bibd/field.hpp"
#include "bibd/friendship.hpp"

#include <map>

using namespace bibd;

namespace {

using Counts = std::vector<std::int64_t>;
using Sizes = std::map<Counts, std::uint64_t>;

Sizes sizes(const std::vector<SubsetClass>& level)
{
    Sizes out;
    for (const auto& cls : level) {
        out[Counts(cls.signature.counts().begin(), cls.signature.counts().end())] = cls.count;
    }
    return out;
}

ClassifyOptions counts_only()
{
    ClassifyOptions o;
    o.retain_members = false;
    return o;
}

} // namespace

TEST_CASE("Fano subdivision")
{
    const auto sub = classify_all(fano_plane());
    REQUIRE(sub.levels.size() == 8);
    CHECK(sub.class_count() == 10);
    std::vector<std::uint64_t> counts;
    for (const auto& level : sub.levels) {
        for (const auto& cls : level) {
            counts.push_back(cls.count);
            CHECK(cls.design_verdict.has_value());
        }
    }
    CHECK(counts == std::vector<std::uint64_t>{1, 7, 21, 7, 28, 28, 7, 21, 7, 1});

    const auto& l3 = sub.levels[3];
    CHECK(l3[0].signature.to_string() == "(0,6,0,1)");
    CHECK(*l3[0].design_verdict == DesignParams{7, 7, 3, 3, 1});
    CHECK(l3[1].signature.to_string() == "(1,3,3,0)");
    CHECK(*l3[1].design_verdict == DesignParams{7, 28, 12, 3, 4});
    const auto& l4 = sub.levels[4];
    CHECK(l4[0].signature.to_string() == "(0,3,3,1)");
    CHECK(l4[0].count == 28);
    CHECK(l4[1].signature.to_string() == "(1,0,6,0)");
    CHECK(*l4[1].design_verdict == DesignParams{7, 7, 4, 4, 2});
    CHECK(sub.levels[0][0].members == std::vector<Block>{Block{}});

    const auto report = analyze(sub, 2);
    CHECK(report.classes.size() == 10);
    CHECK(report.all_designs);
    CHECK(report.friendly);
    CHECK(report.all_self_friends);
    CHECK(report.alpha_hypotheses);
    CHECK(report.conjecture_holds);
    for (char c : report.friends_with_parent) {
        CHECK(c);
    }
}

TEST_CASE("STS(13) class sizes")
{
    const auto s1 = sts13_s1();
    const auto s2 = sts13_s2();
    CHECK(sizes(classify_level(s1, 3, counts_only())) == Sizes{{{10, 15, 0, 1}, 26}, {{11, 12, 3, 0}, 260}});
    CHECK(sizes(classify_level(s1, 4, counts_only())) == Sizes{{{7, 15, 3, 1}, 260}, {{8, 12, 6, 0}, 455}});
    CHECK(sizes(classify_level(s1, 5, counts_only())) ==
          Sizes{{{5, 13, 7, 1}, 780}, {{4, 16, 4, 2}, 195}, {{6, 10, 10, 0}, 312}});
    CHECK(sizes(classify_level(s1, 6, counts_only())) ==
          Sizes{{{2, 15, 6, 3}, 208}, {{1, 18, 3, 4}, 13}, {{4, 9, 12, 1}, 468}, {{3, 12, 9, 2}, 988}, {{5, 6, 15, 0}, 39}});
    CHECK(sizes(classify_level(s2, 5, counts_only())) == sizes(classify_level(s1, 5, counts_only())));
    CHECK(sizes(classify_level(s2, 6, counts_only())) ==
          Sizes{{{2, 15, 6, 3}, 228}, {{1, 18, 3, 4}, 8}, {{4, 9, 12, 1}, 488}, {{3, 12, 9, 2}, 958}, {{5, 6, 15, 0}, 34}});
}

TEST_CASE("STS(13) level 5 classes are designs but not a friendly family")
{
    const auto s1 = sts13_s1();
    const auto level = classify_level(s1, 5);
    REQUIRE(level.size() == 3);
    CHECK(*level[0].design_verdict == DesignParams{13, 195, 75, 5, 25});
    CHECK(*level[1].design_verdict == DesignParams{13, 780, 300, 5, 100});
    CHECK(*level[2].design_verdict == DesignParams{13, 312, 120, 5, 40});
    for (const auto& cls : level) {
        const auto fam = cls.family(s1.ground());
        CHECK(are_friends(fam, s1).friends);
        CHECK_FALSE(are_friends(fam, fam).friends);
    }
    CHECK(transitivity_counterexample(13, level[0].family(s1.ground()), level[1].family(s1.ground())));
}

TEST_CASE("STS(13) level 6 classes are not designs")
{
    for (const auto& cls : classify_level(sts13_s1(), 6)) {
        CHECK_FALSE(cls.design_verdict.has_value());
        CHECK_FALSE(cls.design_witness.empty());
    }
}

TEST_CASE("triple-system classes match the closed forms")
{
    const auto s1 = sts13_s1();
    const auto k3 = theorem_k3_classes(s1, 1);
    CHECK(k3[0].holds());
    CHECK(k3[1].holds());
    CHECK(k3[1].predicted == DesignParams{13, 260, 60, 3, 10});

    const auto k4 = theorem_k4_classes(s1, 1);
    CHECK(k4[0].holds());
    CHECK(k4[1].holds());
    CHECK(k4[0].predicted == DesignParams{13, 260, 80, 4, 20});
    CHECK(k4[1].predicted == DesignParams{13, 455, 140, 4, 35});
    CHECK(k4[0].members.size() == 260);

    const auto fano4 = theorem_k4_classes(fano_plane(), 1);
    CHECK(fano4[0].predicted == DesignParams{7, 28, 16, 4, 8});
    CHECK(fano4[1].predicted == DesignParams{7, 7, 4, 4, 2});
    CHECK(fano4[0].holds());
    CHECK(fano4[1].holds());
    CHECK(theorem_k3_classes(fano_plane())[1].predicted == DesignParams{7, 28, 12, 3, 4});

    CHECK_THROWS_AS(theorem_k4_classes(full_design(7, 3)), std::invalid_argument);
    CHECK_THROWS_AS(theorem_k3_classes(complement_design(fano_plane())), std::invalid_argument);
}

TEST_CASE("D1(4) class against STS(13) blocks")
{
    const auto s1 = sts13_s1();
    const auto k4 = theorem_k4_classes(s1, 1);
    const BlockFamily d14(s1.ground(), k4[0].members);
    const auto v = are_friends(d14, s1);
    REQUIRE(v.friends);
    CHECK(std::vector<std::int64_t>(v.profile_1_2->counts().begin(), v.profile_1_2->counts().end()) ==
          std::vector<std::int64_t>{70, 150, 30, 10, 0});
}

TEST_CASE("projective plane of order 3 subdivides into a friendly family")
{
    const auto sub = classify_all(projective_plane(prime_field(3)));
    CHECK(sub.class_count() == 30);
    const auto report = analyze(sub);
    CHECK(report.all_designs);
    CHECK(report.friendly);
    CHECK(report.conjecture_holds);
}

TEST_CASE("classification options")
{
    const auto fano = fano_plane();
    ClassifyOptions plain;
    plain.threads = 1;
    const auto reference = classify_all(fano, plain);

    ClassifyOptions complements = plain;
    complements.derive_complements = true;
    complements.cross_check = true;
    const auto derived = classify_all(fano, complements);
    REQUIRE(derived.levels.size() == reference.levels.size());
    for (std::size_t n = 0; n < reference.levels.size(); ++n) {
        REQUIRE(derived.levels[n].size() == reference.levels[n].size());
        for (std::size_t i = 0; i < reference.levels[n].size(); ++i) {
            CHECK(derived.levels[n][i].members == reference.levels[n][i].members);
        }
    }

    ClassifyOptions threaded = plain;
    threaded.threads = 4;
    const auto s1 = sts13_s1();
    const auto a = classify_level(s1, 5, plain);
    const auto b = classify_level(s1, 5, threaded);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].members == b[i].members);
        CHECK(std::is_sorted(a[i].members.begin(), a[i].members.end(), LexLess{}));
    }

    CHECK_THROWS_AS(classify_level(fano, 8), std::invalid_argument);
    CHECK_THROWS_AS(classify_level(fano, -1), std::invalid_argument);
    ClassifyOptions tight = plain;
    tight.sweep_limit = 6;
    CHECK_THROWS_AS(classify_all(fano, tight), std::invalid_argument);

    const auto dropped = classify_level(fano, 3, counts_only());
    CHECK(dropped[0].members.empty());
    CHECK_FALSE(dropped[0].design_verdict.has_value());
    CHECK_THROWS_AS(dropped[0].family(fano.ground()), std::logic_error);
}

TEST_CASE("a parent that is not a design can still be classified")
{
    const GroundSet g(5);
    const BlockFamily parent(g, {Block::from_labels({1, 2}), Block::from_labels({3, 4})});
    const auto level = classify_level(parent, 2);
    std::uint64_t total = 0;
    for (const auto& cls : level) {
        total += cls.count;
    }
    CHECK(total == 10);
}
