#include "bibd/catalog.hpp"
#include "bibd/classify.hpp"
#include "bibd/cli.hpp"
#include "bibd/family.hpp"
#include "bibd/field.hpp"
#include "bibd/friendship.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace bibd {

namespace {

using Counts = std::vector<std::int64_t>;

Counts counts(const IntersectionProfile& p)
{
    return {p.counts().begin(), p.counts().end()};
}

std::map<Counts, std::uint64_t> level_sizes(const BlockFamily& parent, int n, int threads)
{
    ClassifyOptions options;
    options.threads = threads;
    options.retain_members = false;
    std::map<Counts, std::uint64_t> out;
    for (const auto& cls : classify_level(parent, n, options)) {
        out[counts(cls.signature)] = cls.count;
    }
    return out;
}

const SubsetClass& class_with(const std::vector<SubsetClass>& level, const Counts& signature)
{
    for (const auto& cls : level) {
        if (counts(cls.signature) == signature) {
            return cls;
        }
    }
    throw std::logic_error("no class with the expected signature");
}

std::size_t index_of(const FriendlyFamily& f, const std::string& name)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.member(i).name == name) {
            return i;
        }
    }
    throw std::logic_error("no member " + name);
}

struct Check {
    std::string name;
    std::function<bool(std::string&)> run;
};

std::vector<Check> checks(int threads)
{
    std::vector<Check> out;
    auto add = [&](std::string name, std::function<bool(std::string&)> fn) {
        out.push_back({std::move(name), std::move(fn)});
    };

    add("admissible (7,7,3,3,1) and (9,12,8,6,5)", [](std::string&) {
        return admissible({7, 7, 3, 3, 1}) && admissible({9, 12, 8, 6, 5}) && !admissible({7, 7, 3, 3, 2});
    });
    add("Fano blocks form a (7,7,3,3,1) design", [](std::string& d) {
        const auto p = fano_plane().params();
        d = p.to_string();
        return p == DesignParams{7, 7, 3, 3, 1};
    });
    add("full design D5 on 7 points has 21 blocks", [](std::string& d) {
        d = full_design(7, 5).params().to_string();
        return full_design(7, 5).b() == 21;
    });
    add("profile(Fano, {1,2,3,4,5}) = (0,1,4,2)", [](std::string& d) {
        const auto p = profile(fano_plane(), Block::from_labels({1, 2, 3, 4, 5}));
        d = p.to_string();
        return d == "(0,1,4,2)";
    });
    add("profile(D5, {2,3,5}) = (0,3,12,6)", [](std::string& d) {
        const auto p = profile(full_design(7, 5), Block::from_labels({2, 3, 5}));
        d = p.to_string();
        return d == "(0,3,12,6)";
    });
    add("moment identities for (0,1,4,2) and (0,0,0,2,9,0,1)", [](std::string&) {
        return check_moment_identities(IntersectionProfile({0, 1, 4, 2}, 5), {7, 7, 3, 3, 1}) &&
               check_moment_identities(IntersectionProfile({0, 0, 0, 2, 9, 0, 1}, 6), {9, 12, 8, 6, 5});
    });
    add("closed-form self profile of STS(13) = (10,15,0,1)", [](std::string& d) {
        const auto p = theoretical_self_profile({13, 26, 6, 3, 1});
        d = p ? p->to_string() : "none";
        return d == "(10,15,0,1)";
    });
    add("Fano and D5 are friends with (0,3,12,6) / (0,1,4,2)", [](std::string& d) {
        const auto v = are_friends(full_design(7, 5), fano_plane());
        d = v.friends ? v.profile_1_2->to_string() + " " + v.profile_2_1->to_string() : "not friends";
        return v.friends && v.profile_1_2->to_string() == "(0,3,12,6)" && v.profile_2_1->to_string() == "(0,1,4,2)" &&
               check_count_identity(v, 21, 7);
    });
    add("(9,12,8,6,5) design is self-friendly with (0,0,0,2,9,0,1), no closed form", [](std::string& d) {
        const auto v = is_self_friend(design_9_12_8_6_5());
        d = v.friends ? v.profile_1_2->to_string() : "not friends";
        return v.friends && d == "(0,0,0,2,9,0,1)" && v.theorem_case == SelfFriendCase::none;
    });
    add("projective planes PG(2,2), PG(2,3) are self-friendly", [](std::string&) {
        return is_self_friend(projective_plane(prime_field(2))).friends &&
               is_self_friend(projective_plane(prime_field(3))).friends;
    });
    add("Fano family is friendly with the listed order", [threads](std::string& d) {
        const auto f = FriendlyFamily::build(fano_family(), threads);
        const auto rel = order_relation(f);
        const std::vector<std::pair<std::string, std::string>> listed = {
            {"D1", "D2"},  {"D2", "P3"},  {"D2", "D3'"}, {"D3'", "D4"}, {"D3'", "D4'"},
            {"P3", "D4'"}, {"D4", "D5"},  {"D4'", "D5"}, {"D5", "D6"},  {"D6", "D7"},
        };
        const auto covers = transitive_reduction(rel);
        std::size_t without_empty = 0;
        for (const auto& [i, j] : covers) {
            if (f.member(i).name != "D0") {
                ++without_empty;
            }
        }
        bool ok = without_empty == listed.size() && !less_than(f, index_of(f, "P3"), index_of(f, "D4"));
        for (const auto& [a, b] : listed) {
            ok = ok && std::find(covers.begin(), covers.end(), std::pair{index_of(f, a), index_of(f, b)}) != covers.end();
        }
        d = std::to_string(covers.size()) + " covering pairs";
        return ok && check_alpha_hypotheses(f) && check_order_preservation(f);
    });
    add("STS(13) S1 class sizes for n = 3..6", [threads](std::string&) {
        const auto s1 = sts13_s1();
        return level_sizes(s1, 3, threads) == std::map<Counts, std::uint64_t>{{{10, 15, 0, 1}, 26}, {{11, 12, 3, 0}, 260}} &&
               level_sizes(s1, 4, threads) == std::map<Counts, std::uint64_t>{{{7, 15, 3, 1}, 260}, {{8, 12, 6, 0}, 455}} &&
               level_sizes(s1, 5, threads) ==
                   std::map<Counts, std::uint64_t>{{{5, 13, 7, 1}, 780}, {{4, 16, 4, 2}, 195}, {{6, 10, 10, 0}, 312}} &&
               level_sizes(s1, 6, threads) == std::map<Counts, std::uint64_t>{{{2, 15, 6, 3}, 208},
                                                                              {{1, 18, 3, 4}, 13},
                                                                              {{4, 9, 12, 1}, 468},
                                                                              {{3, 12, 9, 2}, 988},
                                                                              {{5, 6, 15, 0}, 39}};
    });
    add("STS(13) S2 level 6 sizes 228/8/488/958/34", [threads](std::string&) {
        return level_sizes(sts13_s2(), 6, threads) == std::map<Counts, std::uint64_t>{{{2, 15, 6, 3}, 228},
                                                                                      {{1, 18, 3, 4}, 8},
                                                                                      {{4, 9, 12, 1}, 488},
                                                                                      {{3, 12, 9, 2}, 958},
                                                                                      {{5, 6, 15, 0}, 34}};
    });
    add("S1 level 5: designs, friends with S1, not self-friendly", [threads](std::string&) {
        const auto s1 = sts13_s1();
        ClassifyOptions options;
        options.threads = threads;
        const auto level = classify_level(s1, 5, options);
        bool ok = level.size() == 3;
        for (const auto& cls : level) {
            const auto fam = cls.family(s1.ground());
            ok = ok && cls.design_verdict && are_friends(fam, s1).friends && !are_friends(fam, fam).friends;
        }
        ok = ok && !are_friends(level[0].family(s1.ground()), level[1].family(s1.ground())).friends;
        return ok;
    });
    add("S1 level 6: no class is a design", [threads](std::string&) {
        ClassifyOptions options;
        options.threads = threads;
        const auto level = classify_level(sts13_s1(), 6, options);
        return std::none_of(level.begin(), level.end(), [](const SubsetClass& c) { return c.design_verdict.has_value(); });
    });
    add("S1 4-subsets containing a block: 260, phi = (7,15,3,1); rest 455", [threads](std::string& d) {
        const auto s1 = sts13_s1();
        const auto k4 = theorem_k4_classes(s1, threads);
        ClassifyOptions options;
        options.threads = threads;
        const auto level = classify_level(s1, 4, options);
        const auto& first = class_with(level, {7, 15, 3, 1});
        d = k4[0].predicted.to_string() + " / " + std::to_string(k4[1].members.size());
        return k4[0].holds() && k4[1].holds() && first.count == 260 && k4[1].members.size() == 455;
    });
    add("transitivity fails: S1 level-5 classes vs D12", [threads](std::string&) {
        const auto s1 = sts13_s1();
        ClassifyOptions options;
        options.threads = threads;
        const auto level = classify_level(s1, 5, options);
        return transitivity_counterexample(13, level[0].family(s1.ground()), level[1].family(s1.ground()));
    });
    add("Fano subdivision is the ten-member family", [threads](std::string& d) {
        ClassifyOptions options;
        options.threads = threads;
        const auto sub = classify_all(fano_plane(), options);
        const auto report = analyze(sub, threads);
        d = std::to_string(sub.class_count()) + " classes";
        return sub.class_count() == 10 && report.conjecture_holds && report.alpha_hypotheses;
    });
    add("PG(2,3) subdivision: every class a design, family friendly", [threads](std::string& d) {
        ClassifyOptions options;
        options.threads = threads;
        const auto sub = classify_all(projective_plane(prime_field(3)), options);
        const auto report = analyze(sub, threads);
        d = std::to_string(sub.class_count()) + " classes";
        return report.all_designs && report.friendly;
    });
    return out;
}

} // namespace

std::vector<CheckResult> run_selfcheck(int threads)
{
    std::vector<CheckResult> results;
    for (auto& check : checks(threads)) {
        CheckResult r;
        r.name = check.name;
        try {
            r.passed = check.run(r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace bibd
