#include "bibd/cli.hpp"

#include "bibd/catalog.hpp"
#include "bibd/classify.hpp"
#include "bibd/design_io.hpp"
#include "bibd/error.hpp"
#include "bibd/family.hpp"
#include "bibd/field.hpp"
#include "bibd/friendship.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace bibd::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Text and JSON renderings of one command's result.
struct Outcome {
    int code = kExitOk;
    std::string text;
    json data = json::object();
};

struct Globals {
    int threads = 0;
    bool json = false;
};

json to_json(const DesignParams& p)
{
    return {{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
}

json to_json(const IntersectionProfile& p)
{
    return {{"counts", std::vector<std::int64_t>(p.counts().begin(), p.counts().end())},
            {"probe_size", p.probe_size()},
            {"display", p.to_string()}};
}

json to_json(const std::optional<IntersectionProfile>& p)
{
    return p ? to_json(*p) : json(nullptr);
}

Block parse_set(const std::string& text)
{
    std::vector<int> labels;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            labels.push_back(std::stoi(token, &used));
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::logic_error&) {
            throw Error("bad label '" + token + "' in --set");
        }
    }
    return Block::from_labels(labels);
}

// ---- verify -----------------------------------------------------------------

Outcome cmd_verify(const std::string& path)
{
    Outcome o;
    const auto parsed = parse_blocks(read_text_file(path));
    const auto detection = detect_design(parsed.blocks, parsed.ground.size());
    o.data["file"] = path;
    const bool degenerate_empty = parsed.blocks.size() == 1 && parsed.blocks.front().empty();
    if (detection || degenerate_empty) {
        const auto params = detection ? *detection.params : DesignParams{parsed.ground.size(), 1, 0, 0, 0};
        o.data["design"] = true;
        o.data["params"] = to_json(params);
        o.data["admissible"] = admissible(params);
        o.text = "design " + params.to_string() + "\n";
        if (degenerate_empty) {
            o.text += "degenerate: empty set\n";
        }
    } else {
        o.code = kExitNegative;
        o.data["design"] = false;
        o.data["witness"] = detection.witness;
        o.text = "not a design: " + detection.witness + "\n";
    }
    return o;
}

// ---- profile ----------------------------------------------------------------

Outcome cmd_profile(const std::string& path, const std::string& set)
{
    Outcome o;
    const auto family = load_family(read_text_file(path));
    const auto p = profile(family, parse_set(set));
    o.data["file"] = path;
    o.data["profile"] = to_json(p);
    o.text = "profile " + p.to_string() + "\n";
    if (family.is_design()) {
        const bool holds = check_moment_identities(p, *family.design_params());
        o.data["moment_identities"] = holds;
        o.text += std::string("moment identities: ") + (holds ? "hold" : "FAIL") + "\n";
    } else {
        o.data["moment_identities"] = nullptr;
        o.text += "note: " + path + " is not a design\n";
    }
    return o;
}

// ---- friends ----------------------------------------------------------------

Outcome cmd_friends(const std::string& a_path, const std::string& b_path)
{
    Outcome o;
    const auto a = load_family(read_text_file(a_path));
    const auto b = load_family(read_text_file(b_path));
    const auto verdict = are_friends(a, b);
    o.data["first"] = a_path;
    o.data["second"] = b_path;
    o.data["first_is_design"] = verdict.first_is_design;
    o.data["second_is_design"] = verdict.second_is_design;
    o.data["friends"] = verdict.friends;
    std::ostringstream text;
    text << "friends: " << (verdict.friends ? "yes" : "no") << "\n";
    if (verdict.friends) {
        const bool identity = check_count_identity(verdict, a.b(), b.b());
        o.data["profile_1_2"] = to_json(verdict.profile_1_2);
        o.data["profile_2_1"] = to_json(verdict.profile_2_1);
        o.data["count_identity"] = identity;
        text << "phi(first,second) = " << verdict.profile_1_2->to_string() << "\n";
        text << "phi(second,first) = " << verdict.profile_2_1->to_string() << "\n";
        text << "count identity: " << (identity ? "holds" : "FAILS") << "\n";
    } else {
        o.code = kExitNegative;
        o.data["witness"] = verdict.witness->to_string();
        text << "witness: " << verdict.witness->to_string() << "\n";
    }
    if (!verdict.first_is_design) {
        text << "note: " << a_path << " is not a design\n";
    }
    if (!verdict.second_is_design) {
        text << "note: " << b_path << " is not a design\n";
    }
    o.text = text.str();
    return o;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyArgs {
    std::string parent;
    int level = -1;
    bool all = false;
    bool report = false;
    std::string emit_dir;
    bool family = false;
    bool counts_only = false;
};

std::string verdict_text(const SubsetClass& cls)
{
    if (cls.members.empty()) {
        return "members not retained";
    }
    return cls.design_verdict ? "design " + cls.design_verdict->to_string() : "not a design";
}

json class_json(const SubsetClass& cls)
{
    json j = {{"n", cls.n}, {"signature", to_json(cls.signature)}, {"size", cls.count}};
    j["design"] = cls.design_verdict ? to_json(*cls.design_verdict) : json(nullptr);
    if (!cls.design_witness.empty()) {
        j["witness"] = cls.design_witness;
    }
    return j;
}

void emit_class(const fs::path& dir, const std::string& parent, const SubsetClass& cls, std::size_t index,
                GroundSet ground)
{
    const auto name = "level" + std::to_string(cls.n) + "_class" + std::to_string(index + 1) + ".design";
    const std::string header =
        "parent: " + parent + "\nn: " + std::to_string(cls.n) + "\nsignature: " + cls.signature.to_string();
    write_text_file(dir / name, save_design(cls.family(ground), header));
}

Outcome cmd_classify(const ClassifyArgs& args, const Globals& globals)
{
    Outcome o;
    const auto text = read_text_file(args.parent);
    const BlockFamily parent = args.family ? load_family(text) : BlockFamily(load_design(text).family());

    ClassifyOptions options;
    options.threads = globals.threads;
    options.retain_members = !args.counts_only;
    if (args.counts_only && (args.report || !args.emit_dir.empty())) {
        throw Error("--counts-only cannot be combined with --report or --emit-classes");
    }

    std::vector<std::vector<SubsetClass>> levels;
    std::optional<Subdivision> sub;
    if (args.all) {
        sub = classify_all(parent, options);
        levels = sub->levels;
    } else {
        levels.push_back(classify_level(parent, args.level, options));
    }

    std::ostringstream out;
    o.data["parent"] = args.parent;
    o.data["parent_params"] = parent.design_params() ? to_json(*parent.design_params()) : json(nullptr);
    json jlevels = json::array();
    for (const auto& level : levels) {
        json jl = {{"n", level.empty() ? 0 : level.front().n}, {"classes", json::array()}};
        for (std::size_t i = 0; i < level.size(); ++i) {
            const auto& cls = level[i];
            out << "n=" << cls.n << " class " << (i + 1) << " signature " << cls.signature.to_string() << " size "
                << cls.count << " " << verdict_text(cls) << "\n";
            jl["classes"].push_back(class_json(cls));
        }
        jlevels.push_back(std::move(jl));
    }
    o.data["levels"] = std::move(jlevels);

    if (!args.emit_dir.empty()) {
        fs::create_directories(args.emit_dir);
        for (const auto& level : levels) {
            for (std::size_t i = 0; i < level.size(); ++i) {
                emit_class(args.emit_dir, args.parent, level[i], i, parent.ground());
            }
        }
    }

    if (args.report) {
        auto yes = [](bool b) { return b ? "yes" : "no"; };
        if (sub) {
            const auto report = analyze(*sub, globals.threads);
            json jclasses = json::array();
            out << "report:\n";
            for (std::size_t i = 0; i < report.classes.size(); ++i) {
                const auto& ref = report.classes[i];
                const auto& cls = sub->levels[ref.level][ref.index];
                out << "  n=" << ref.level << " class " << (ref.index + 1) << ": design " << yes(report.is_design[i])
                    << ", self-friend " << yes(report.self_friend[i]) << ", friends with parent "
                    << yes(report.friends_with_parent[i]) << "\n";
                jclasses.push_back({{"n", ref.level},
                                    {"class", ref.index + 1},
                                    {"signature", cls.signature.to_string()},
                                    {"design", static_cast<bool>(report.is_design[i])},
                                    {"self_friend", static_cast<bool>(report.self_friend[i])},
                                    {"friends_with_parent", static_cast<bool>(report.friends_with_parent[i])}});
            }
            std::vector<bool> level_friendly(report.level_friendly.begin(), report.level_friendly.end());
            std::vector<bool> level_designs(report.level_all_designs.begin(), report.level_all_designs.end());
            out << "  levels friendly:";
            for (std::size_t n = 0; n < level_friendly.size(); ++n) {
                out << " " << n << (level_friendly[n] ? "+" : "-");
            }
            out << "\n";
            out << "  all classes designs: " << yes(report.all_designs) << "\n";
            out << "  pairwise friendly: " << yes(report.friendly) << "\n";
            out << "  all self-friends: " << yes(report.all_self_friends) << "\n";
            out << "  alpha hypotheses: " << yes(report.alpha_hypotheses) << "\n";
            out << "  friendly family of designs: " << yes(report.conjecture_holds) << "\n";
            o.data["report"] = {{"classes", jclasses},
                                {"level_friendly", level_friendly},
                                {"level_all_designs", level_designs},
                                {"all_designs", report.all_designs},
                                {"friendly", report.friendly},
                                {"all_self_friends", report.all_self_friends},
                                {"alpha_hypotheses", report.alpha_hypotheses},
                                {"conjecture_holds", report.conjecture_holds}};
        } else {
            const auto& level = levels.front();
            std::vector<BlockFamily> families;
            for (const auto& cls : level) {
                families.push_back(cls.family(parent.ground()));
            }
            json jclasses = json::array();
            bool friendly = true;
            out << "report:\n";
            for (std::size_t i = 0; i < families.size(); ++i) {
                const bool self = are_friends(families[i], families[i]).friends;
                const bool with_parent = are_friends(families[i], parent).friends;
                std::vector<std::size_t> friends_with;
                for (std::size_t j = 0; j < families.size(); ++j) {
                    if (j != i && are_friends(families[i], families[j]).friends) {
                        friends_with.push_back(j + 1);
                    } else if (j != i) {
                        friendly = false;
                    }
                }
                out << "  class " << (i + 1) << ": design " << yes(level[i].design_verdict.has_value())
                    << ", self-friend " << yes(self) << ", friends with parent " << yes(with_parent) << "\n";
                jclasses.push_back({{"class", i + 1},
                                    {"design", level[i].design_verdict.has_value()},
                                    {"self_friend", self},
                                    {"friends_with_parent", with_parent},
                                    {"friends_with", friends_with}});
            }
            out << "  level friendly: " << yes(friendly) << "\n";
            o.data["report"] = {{"classes", jclasses}, {"level_friendly", friendly}};
        }
    }
    o.text = out.str();
    return o;
}

// ---- poset ------------------------------------------------------------------

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs)
{
    std::vector<fs::path> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(in)) {
                if (entry.is_regular_file() && entry.path().extension() == ".design") {
                    found.push_back(entry.path());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.emplace_back(in);
        }
    }
    return files;
}

Outcome cmd_poset(const std::vector<std::string>& inputs, const std::string& dot_path, bool check_alpha,
                  const Globals& globals)
{
    Outcome o;
    std::vector<NamedDesign> designs;
    for (const auto& file : expand_inputs(inputs)) {
        designs.push_back({file.stem().string(), load_design(read_text_file(file))});
    }
    if (designs.empty()) {
        throw Error("no design files given");
    }
    std::optional<FriendlyFamily> family;
    try {
        family = FriendlyFamily::build(std::move(designs), globals.threads);
    } catch (const FamilyError& e) {
        o.code = kExitNegative;
        o.data["friendly"] = false;
        o.data["witness"] = e.what();
        o.text = "friendly: no\n" + std::string(e.what()) + "\n";
        return o;
    }
    const auto rel = order_relation(*family);
    std::ostringstream out;
    out << "friendly: yes\nmembers:\n";
    json members = json::array();
    for (std::size_t i = 0; i < family->size(); ++i) {
        out << "  " << family->label(i) << "\n";
        members.push_back({{"name", family->member(i).name}, {"params", to_json(family->member(i).design.params())}});
    }
    out << "relation:\n";
    json pairs = json::array();
    for (const auto& [i, j] : rel.pairs) {
        out << "  " << family->member(i).name << " < " << family->member(j).name << "\n";
        pairs.push_back({family->member(i).name, family->member(j).name});
    }
    out << "transitive: " << (rel.transitive ? "yes" : "no") << "\n";
    out << "closure antisymmetric: " << (rel.closure_antisymmetric ? "yes" : "no") << "\n";
    o.data["friendly"] = true;
    o.data["members"] = members;
    o.data["relation"] = pairs;
    o.data["transitive"] = rel.transitive;
    o.data["closure_antisymmetric"] = rel.closure_antisymmetric;

    json covers = json::array();
    for (const auto& [i, j] : transitive_reduction(rel)) {
        covers.push_back({family->member(i).name, family->member(j).name});
    }
    o.data["hasse"] = covers;
    if (!dot_path.empty()) {
        write_text_file(dot_path, export_hasse(rel));
        out << "hasse diagram: " << dot_path << "\n";
    }
    if (check_alpha) {
        const bool hypotheses = check_alpha_hypotheses(*family);
        out << "alpha hypotheses: " << (hypotheses ? "yes" : "no") << "\n";
        o.data["alpha_hypotheses"] = hypotheses;
        if (hypotheses && family->ground().size() <= 16) {
            const bool preserved = check_order_preservation(*family);
            out << "order preserved: " << (preserved ? "yes" : "no") << "\n";
            o.data["order_preserved"] = preserved;
            if (!preserved) {
                o.code = kExitNegative;
            }
        } else {
            o.data["order_preserved"] = nullptr;
            if (!hypotheses) {
                o.code = kExitNegative;
            }
        }
    }
    o.text = out.str();
    return o;
}

// ---- pg / catalog / selfcheck -----------------------------------------------

Outcome cmd_pg(int order, const std::string& tables, const std::string& output)
{
    Outcome o;
    const auto field = tables.empty() ? prime_field(order) : load_field_tables(read_text_file(tables));
    if (field.order() != order) {
        throw Error("field table has order " + std::to_string(field.order()) + ", expected " + std::to_string(order));
    }
    const auto plane = projective_plane(field);
    write_text_file(output, save_design(plane, "PG(2," + std::to_string(order) + ")"));
    o.data["order"] = order;
    o.data["params"] = to_json(plane.params());
    o.data["output"] = output;
    o.text = "PG(2," + std::to_string(order) + ") " + plane.params().to_string() + " -> " + output + "\n";
    return o;
}

Outcome cmd_catalog_list()
{
    Outcome o;
    json entries = json::array();
    std::ostringstream out;
    for (const auto& e : catalog()) {
        out << e.name << " " << e.design.params().to_string() << "  " << e.provenance << "\n";
        entries.push_back({{"name", e.name}, {"params", to_json(e.design.params())}, {"provenance", e.provenance}});
    }
    o.data["entries"] = entries;
    o.text = out.str();
    return o;
}

Outcome cmd_catalog_export(const std::string& name, const std::string& output)
{
    Outcome o;
    const auto& e = catalog_entry(name);
    write_text_file(output, save_design(e.design, e.name + ": " + e.provenance));
    o.data["name"] = name;
    o.data["output"] = output;
    o.text = name + " -> " + output + "\n";
    return o;
}

Outcome cmd_selfcheck(const Globals& globals)
{
    Outcome o;
    std::ostringstream out;
    json rows = json::array();
    int failed = 0;
    for (const auto& r : run_selfcheck(globals.threads)) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        if (!r.detail.empty()) {
            out << "  [" << r.detail << "]";
        }
        out << "\n";
        rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        failed += r.passed ? 0 : 1;
    }
    out << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed") << "\n";
    o.code = failed == 0 ? kExitOk : kExitNegative;
    o.data["checks"] = rows;
    o.data["failed"] = failed;
    o.text = out.str();
    return o;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Block design friendship and intersection-class toolkit", "bibd"};
    app.require_subcommand(1);

    Globals globals;
    app.add_option("--threads", globals.threads, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", globals.json, "machine-readable output");

    std::string file_a, file_b, set_text;
    auto* verify = app.add_subcommand("verify", "check the BIBD axioms");
    verify->add_option("file", file_a)->required();

    auto* prof = app.add_subcommand("profile", "intersection profile against a set");
    prof->add_option("design", file_a)->required();
    prof->add_option("--set", set_text, "comma-separated labels")->required();

    auto* friends = app.add_subcommand("friends", "decide friendship of two designs");
    friends->add_option("first", file_a)->required();
    friends->add_option("second", file_b)->required();

    ClassifyArgs cargs;
    auto* classify = app.add_subcommand("classify", "classify subsets by intersection signature");
    classify->add_option("parent", cargs.parent)->required();
    auto* level_opt = classify->add_option("-n", cargs.level, "subset size");
    auto* all_opt = classify->add_flag("--all", cargs.all, "every level");
    level_opt->excludes(all_opt);
    classify->add_flag("--report", cargs.report, "design and friendship analysis");
    classify->add_option("--emit-classes", cargs.emit_dir, "write each class as a design file");
    classify->add_flag("--family", cargs.family, "accept a parent that is not a design");
    classify->add_flag("--counts-only", cargs.counts_only, "keep signatures and counts, drop members");

    std::vector<std::string> poset_inputs;
    std::string dot_path;
    bool check_alpha = false;
    auto* poset = app.add_subcommand("poset", "friendly family order and Hasse diagram");
    poset->add_option("files", poset_inputs, "design files or directories")->required();
    poset->add_option("--dot", dot_path, "write the Hasse diagram");
    poset->add_flag("--check-alpha", check_alpha, "check the power-set map");

    int order = 0;
    std::string tables, output;
    auto* pg = app.add_subcommand("pg", "build PG(2,q)");
    pg->add_option("--order", order)->required();
    pg->add_option("--field-tables", tables);
    pg->add_option("-o", output)->required();

    std::string entry_name, export_out;
    auto* cat = app.add_subcommand("catalog", "embedded designs");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list");
    auto* cat_export = cat->add_subcommand("export");
    cat_export->add_option("name", entry_name)->required();
    cat_export->add_option("-o", export_out)->required();

    auto* selfcheck = app.add_subcommand("selfcheck", "rerun the worked examples");

    std::vector<std::string> argv_store;
    argv_store.reserve(args.size() + 1);
    argv_store.emplace_back("bibd");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        Outcome o;
        if (verify->parsed()) {
            o = cmd_verify(file_a);
        } else if (prof->parsed()) {
            o = cmd_profile(file_a, set_text);
        } else if (friends->parsed()) {
            o = cmd_friends(file_a, file_b);
        } else if (classify->parsed()) {
            if (!cargs.all && cargs.level < 0) {
                err << "error: classify needs -n N or --all\n" << classify->help();
                return kExitUsage;
            }
            o = cmd_classify(cargs, globals);
        } else if (poset->parsed()) {
            o = cmd_poset(poset_inputs, dot_path, check_alpha, globals);
        } else if (pg->parsed()) {
            o = cmd_pg(order, tables, output);
        } else if (cat_list->parsed()) {
            o = cmd_catalog_list();
        } else if (cat_export->parsed()) {
            o = cmd_catalog_export(entry_name, export_out);
        } else if (selfcheck->parsed()) {
            o = cmd_selfcheck(globals);
        }
        if (globals.json) {
            out << o.data.dump(2) << "\n";
        } else {
            out << o.text;
        }
        return o.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace bibd::cli
