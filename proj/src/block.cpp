#include "bibd/block.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace bibd {

Block Block::from_labels(std::span<const int> labels)
{
    std::uint64_t bits = 0;
    for (int label : labels) {
        if (label < 1 || label > kMaxPoints) {
            throw std::invalid_argument("label " + std::to_string(label) + " outside 1.." +
                                        std::to_string(kMaxPoints));
        }
        const std::uint64_t bit = std::uint64_t{1} << (label - 1);
        if (bits & bit) {
            throw std::invalid_argument("label " + std::to_string(label) + " repeated");
        }
        bits |= bit;
    }
    return Block{bits};
}

Block Block::from_labels(std::initializer_list<int> labels)
{
    return from_labels(std::span<const int>(labels.begin(), labels.size()));
}

std::vector<int> Block::labels() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t x = bits_; x != 0; x &= x - 1) {
        out.push_back(std::countr_zero(x) + 1);
    }
    return out;
}

std::string Block::to_string(std::string_view sep) const
{
    std::string out;
    for (int label : labels()) {
        if (!out.empty()) {
            out += sep;
        }
        out += std::to_string(label);
    }
    return out;
}

std::string Block::to_set_string() const
{
    return "{" + to_string(",") + "}";
}

GroundSet::GroundSet(int v) : v_(v), mask_(0)
{
    if (v < 1 || v > kMaxPoints) {
        throw std::invalid_argument("ground set size " + std::to_string(v) + " outside 1.." +
                                    std::to_string(kMaxPoints));
    }
    mask_ = v == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << v) - 1;
}

bool lex_less(Block a, Block b)
{
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) {
        return false;
    }
    // All labels below the lowest differing one are shared. The list holding
    // that label has it at the first mismatch; the other list either has a
    // larger element there or has ended.
    const int pos = std::countr_zero(diff);
    const std::uint64_t above = pos == 63 ? 0 : ~std::uint64_t{0} << (pos + 1);
    if ((a.bits() >> pos) & 1u) {
        return (b.bits() & above) != 0;
    }
    return (a.bits() & above) == 0;
}

bool lex_less(std::span<const Block> a, std::span<const Block> b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](Block x, Block y) { return lex_less(x, y); });
}

namespace {

const std::array<std::array<std::uint64_t, 65>, 65>& binomial_table()
{
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (int n = 0; n <= 64; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
            }
        }
        return t;
    }();
    return table;
}

} // namespace

std::uint64_t binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (n > 64) {
        throw std::invalid_argument("binomial: n > 64");
    }
    return binomial_table()[n][k];
}

Block colex_unrank(int v, int k, std::uint64_t rank)
{
    if (k < 0 || k > v || rank >= binomial(v, k)) {
        throw std::out_of_range("colex_unrank: rank out of range");
    }
    std::uint64_t bits = 0;
    int top = v - 1;
    for (int i = k; i >= 1; --i) {
        // largest c with C(c, i) <= rank
        while (binomial(top, i) > rank) {
            --top;
        }
        bits |= std::uint64_t{1} << top;
        rank -= binomial(top, i);
        --top;
    }
    return Block{bits};
}

std::vector<Block> all_subsets_lex(int v, int k)
{
    std::vector<Block> out;
    out.reserve(binomial(v, k));
    for_each_subset(v, k, [&](Block b) { out.push_back(b); });
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

} // namespace bibd
