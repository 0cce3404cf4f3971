#include "bibd/family.hpp"

#include "bibd/friendship.hpp"
#include "bibd/parallel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bibd {

namespace {

bool canonical_less(const NamedDesign& a, const NamedDesign& b)
{
    if (a.design.k() != b.design.k()) {
        return a.design.k() < b.design.k();
    }
    const auto sa = a.design.family().sorted_blocks();
    const auto sb = b.design.family().sorted_blocks();
    if (sa != sb) {
        return lex_less(sa, sb);
    }
    return a.name < b.name;
}

using Matrix = std::vector<std::vector<char>>;

Matrix relation_matrix(const OrderRelation& rel)
{
    const auto n = rel.labels.size();
    Matrix m(n, std::vector<char>(n, 0));
    for (const auto& [i, j] : rel.pairs) {
        m.at(i).at(j) = 1;
    }
    return m;
}

Matrix closure_of(Matrix m)
{
    const auto n = m.size();
    for (std::size_t via = 0; via < n; ++via) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!m[i][via]) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (m[via][j]) {
                    m[i][j] = 1;
                }
            }
        }
    }
    return m;
}

/// Returns a cycle in the relation graph, or an empty list.
std::vector<std::size_t> find_cycle(const Matrix& m)
{
    const auto n = m.size();
    std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
    std::vector<std::size_t> stack;
    std::vector<std::size_t> cycle;

    auto dfs = [&](auto&& self, std::size_t u) -> bool {
        state[u] = 1;
        stack.push_back(u);
        for (std::size_t w = 0; w < n; ++w) {
            if (!m[u][w]) {
                continue;
            }
            if (state[w] == 1) {
                auto it = std::find(stack.begin(), stack.end(), w);
                cycle.assign(it, stack.end());
                cycle.push_back(w);
                return true;
            }
            if (state[w] == 0 && self(self, w)) {
                return true;
            }
        }
        stack.pop_back();
        state[u] = 2;
        return false;
    };
    for (std::size_t u = 0; u < n; ++u) {
        if (state[u] == 0 && dfs(dfs, u)) {
            break;
        }
    }
    return cycle;
}

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

} // namespace

FriendlyFamily FriendlyFamily::build(std::vector<NamedDesign> designs, int threads)
{
    if (designs.empty()) {
        throw std::invalid_argument("a friendly family needs at least one design");
    }
    const GroundSet ground = designs.front().design.ground();
    for (const auto& d : designs) {
        if (d.design.ground() != ground) {
            throw std::invalid_argument("ground-set mismatch: " + d.name + " has v=" + std::to_string(d.design.v()) +
                                        ", expected v=" + std::to_string(ground.size()));
        }
    }
    std::sort(designs.begin(), designs.end(), canonical_less);

    FriendlyFamily f(ground);
    f.members_ = std::move(designs);
    const auto n = f.members_.size();

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<FriendshipVerdict> verdicts(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        verdicts[p] = are_friends(f.members_[pairs[p].first].design, f.members_[pairs[p].second].design);
    });

    f.profiles_.assign(n * n, std::nullopt);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        const auto& verdict = verdicts[p];
        if (!verdict.friends) {
            throw FamilyError("not friends: " + f.members_[i].name + " and " + f.members_[j].name + " (" +
                                  verdict.witness->to_string() + ")",
                              f.members_[i].name, f.members_[j].name);
        }
        f.profiles_[i * n + j] = verdict.profile_1_2;
        f.profiles_[j * n + i] = verdict.profile_2_1;
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (Block blk : f.members_[i].design.blocks()) {
            if (!f.owners_.emplace(blk.bits(), i).second) {
                f.blocks_disjoint_ = false;
            }
        }
    }
    return f;
}

const IntersectionProfile& FriendlyFamily::profile(std::size_t i, std::size_t j) const
{
    const auto n = members_.size();
    if (i >= n || j >= n) {
        throw std::out_of_range("family member index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("no cached profile of a member against itself");
    }
    return *profiles_[i * n + j];
}

std::optional<std::size_t> FriendlyFamily::owner(Block u) const
{
    const auto it = owners_.find(u.bits());
    if (it == owners_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string FriendlyFamily::label(std::size_t i) const
{
    const auto& m = member(i);
    return m.name + " " + m.design.params().to_string();
}

bool less_than(const FriendlyFamily& f, std::size_t i, std::size_t j)
{
    if (i >= f.size() || j >= f.size()) {
        throw std::out_of_range("family member index out of range");
    }
    const int ki = f.member(i).design.k();
    const int kj = f.member(j).design.k();
    if (ki >= kj) {
        return false;
    }
    return f.profile(i, j)[ki] > 0;
}

bool OrderRelation::contains(std::size_t i, std::size_t j) const
{
    return std::binary_search(pairs.begin(), pairs.end(), std::pair{i, j});
}

OrderRelation order_relation(const FriendlyFamily& f)
{
    OrderRelation rel;
    const auto n = f.size();
    for (std::size_t i = 0; i < n; ++i) {
        rel.labels.push_back(f.label(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (less_than(f, i, j)) {
                rel.pairs.emplace_back(i, j);
            }
        }
    }
    const auto direct = relation_matrix(rel);
    rel.transitive = true;
    for (const auto& [i, j] : rel.pairs) {
        for (std::size_t l = 0; l < n && rel.transitive; ++l) {
            if (direct[j][l] && !direct[i][l]) {
                rel.transitive = false;
            }
        }
    }
    const auto closure = closure_of(direct);
    rel.closure_antisymmetric = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (closure[i][j] && closure[j][i]) {
                rel.closure_antisymmetric = false;
            }
        }
    }
    return rel;
}

bool check_alpha_hypotheses(const FriendlyFamily& f)
{
    const int v = f.ground().size();
    if (!f.blocks_disjoint() || v >= 63) {
        return false;
    }
    return f.total_blocks() == (std::size_t{1} << v);
}

std::size_t alpha(const FriendlyFamily& f, Block u)
{
    if (!check_alpha_hypotheses(f)) {
        throw std::logic_error("alpha is undefined: members share a block or miss a subset");
    }
    const auto owner = f.owner(u);
    if (!owner) {
        throw std::logic_error("subset " + u.to_set_string() + " is not a block of any member");
    }
    return *owner;
}

bool check_order_preservation(const FriendlyFamily& f)
{
    const int v = f.ground().size();
    if (v > 16) {
        throw std::invalid_argument("exhaustive order-preservation check is limited to v <= 16");
    }
    if (!check_alpha_hypotheses(f)) {
        throw std::logic_error("alpha hypotheses fail; order preservation is undefined");
    }
    const auto n = f.size();
    std::vector<char> less(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            less[i * n + j] = less_than(f, i, j) ? 1 : 0;
        }
    }
    const std::uint64_t total = std::uint64_t{1} << v;
    std::vector<std::uint32_t> owner(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        owner[mask] = static_cast<std::uint32_t>(*f.owner(Block{mask}));
    }
    for (std::uint64_t y = 1; y < total; ++y) {
        const auto oy = owner[y];
        // proper submasks of y, including the empty set
        for (std::uint64_t x = (y - 1) & y;; x = (x - 1) & y) {
            const auto ox = owner[x];
            if (!less[ox * n + oy]) {
                return false;
            }
            if (x == 0) {
                break;
            }
        }
    }
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const OrderRelation& rel)
{
    const auto direct = relation_matrix(rel);
    const auto cycle = find_cycle(direct);
    if (!cycle.empty()) {
        std::string msg = "relation has a cycle:";
        for (auto i : cycle) {
            msg += " " + rel.labels[i];
        }
        throw Error(msg);
    }
    const auto closure = closure_of(direct);
    const auto n = closure.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!closure[i][j]) {
                continue;
            }
            bool covered = true;
            for (std::size_t m = 0; m < n && covered; ++m) {
                if (closure[i][m] && closure[m][j]) {
                    covered = false;
                }
            }
            if (covered) {
                covers.emplace_back(i, j);
            }
        }
    }
    return covers;
}

std::string export_hasse(const OrderRelation& rel)
{
    const auto covers = transitive_reduction(rel);
    std::ostringstream out;
    out << "digraph hasse {\n";
    out << "  rankdir=BT;\n";
    for (std::size_t i = 0; i < rel.labels.size(); ++i) {
        out << "  n" << i << " [label=\"" << dot_escape(rel.labels[i]) << "\"];\n";
    }
    for (const auto& [i, j] : covers) {
        out << "  n" << i << " -> n" << j << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace bibd
