#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bibd {

inline constexpr int kMaxPoints = 64;

/// A subset of the ground set {1..v}. Label i lives in bit i-1, so every
/// set operation is a single word operation.
class Block {
public:
    constexpr Block() = default;
    constexpr explicit Block(std::uint64_t bits) : bits_(bits) {}

    /// Throws std::invalid_argument for labels outside 1..64 or repeated labels.
    static Block from_labels(std::span<const int> labels);
    static Block from_labels(std::initializer_list<int> labels);

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int label) const
    {
        return label >= 1 && label <= kMaxPoints && ((bits_ >> (label - 1)) & 1u) != 0;
    }
    constexpr int intersection_size(Block other) const { return std::popcount(bits_ & other.bits_); }
    constexpr bool is_subset_of(Block other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr Block operator&(Block other) const { return Block{bits_ & other.bits_}; }
    constexpr Block operator|(Block other) const { return Block{bits_ | other.bits_}; }

    /// Sorted 1-based labels.
    std::vector<int> labels() const;

    /// Labels joined by `sep`, e.g. "2 3 5".
    std::string to_string(std::string_view sep = " ") const;

    /// "{2,3,5}" for diagnostics.
    std::string to_set_string() const;

    friend constexpr bool operator==(Block, Block) = default;

private:
    std::uint64_t bits_ = 0;
};

/// The point set {1..v}, 1 <= v <= 64.
class GroundSet {
public:
    explicit GroundSet(int v);

    int size() const { return v_; }
    Block all() const { return Block{mask_}; }
    bool contains(Block b) const { return (b.bits() & ~mask_) == 0; }
    Block complement(Block b) const { return Block{~b.bits() & mask_}; }

    friend bool operator==(GroundSet, GroundSet) = default;

private:
    int v_;
    std::uint64_t mask_;
};

/// Lexicographic order on the sorted label lists ({1,2} < {1,2,3} < {1,3}).
bool lex_less(Block a, Block b);

struct LexLess {
    bool operator()(Block a, Block b) const { return lex_less(a, b); }
};

/// Lexicographic order on sequences of blocks, each compared with lex_less.
bool lex_less(std::span<const Block> a, std::span<const Block> b);

/// C(n, k), zero when k < 0 or k > n. Exact for every n <= 64.
std::uint64_t binomial(int n, int k);

/// The k-subset of {1..v} with the given rank in colex order (the order
/// of increasing bit patterns).
Block colex_unrank(int v, int k, std::uint64_t rank);

/// Gosper successor: next larger word with the same popcount.
inline std::uint64_t next_same_popcount(std::uint64_t x)
{
    const std::uint64_t low = x & (~x + 1);
    const std::uint64_t ripple = x + low;
    return ripple | (((ripple ^ x) / low) >> 2);
}

/// Calls f(Block) for `count` consecutive k-subsets in colex order, starting at
/// colex rank `first`.
template <class F>
void for_each_subset_range(int v, int k, std::uint64_t first, std::uint64_t count, F&& f)
{
    if (count == 0) {
        return;
    }
    std::uint64_t x = colex_unrank(v, k, first).bits();
    for (std::uint64_t i = 0; i < count; ++i) {
        f(Block{x});
        if (k == 0 || i + 1 == count) {
            break;
        }
        x = next_same_popcount(x);
    }
}

/// Calls f(Block) for every k-subset of {1..v}, colex order.
template <class F>
void for_each_subset(int v, int k, F&& f)
{
    for_each_subset_range(v, k, 0, binomial(v, k), std::forward<F>(f));
}

/// All k-subsets of {1..v} in lexicographic order.
std::vector<Block> all_subsets_lex(int v, int k);

} // namespace bibd
