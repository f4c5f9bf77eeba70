#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <iterator>

namespace impalg {

// Subsets of a ground set of at most 30 items, packed into one word.
// Tagged so that vertex sets and edge-index sets cannot be mixed up:
// the profile code juggles both at once and the compiler should referee.
template <class Tag>
struct BitSet {
    std::uint32_t bits = 0;

    constexpr BitSet() = default;
    constexpr explicit BitSet(std::uint32_t mask) : bits(mask) {}

    static constexpr BitSet empty_set() { return BitSet{}; }
    static constexpr BitSet singleton(int i) { return BitSet{1u << i}; }
    static constexpr BitSet full(int n) {
        assert(n >= 0 && n <= 30);
        return BitSet{n == 0 ? 0u : ((1u << n) - 1u)};
    }

    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool contains(int i) const { return (bits >> i) & 1u; }
    constexpr bool is_subset_of(BitSet other) const { return (bits & ~other.bits) == 0; }
    constexpr bool intersects(BitSet other) const { return (bits & other.bits) != 0; }

    constexpr BitSet with(int i) const { return BitSet{bits | (1u << i)}; }
    constexpr BitSet without(int i) const { return BitSet{bits & ~(1u << i)}; }

    friend constexpr BitSet operator|(BitSet a, BitSet b) { return BitSet{a.bits | b.bits}; }
    friend constexpr BitSet operator&(BitSet a, BitSet b) { return BitSet{a.bits & b.bits}; }
    // set difference
    friend constexpr BitSet operator-(BitSet a, BitSet b) { return BitSet{a.bits & ~b.bits}; }
    friend constexpr bool operator==(BitSet a, BitSet b) { return a.bits == b.bits; }
    friend constexpr bool operator!=(BitSet a, BitSet b) { return a.bits != b.bits; }
    friend constexpr bool operator<(BitSet a, BitSet b) { return a.bits < b.bits; }

    // Iterates members in increasing order.
    struct member_iterator {
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        std::uint32_t rest = 0;
        int operator*() const { return std::countr_zero(rest); }
        member_iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        member_iterator operator++(int) {
            member_iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const member_iterator&) const = default;
    };

    member_iterator begin() const { return member_iterator{bits}; }
    member_iterator end() const { return member_iterator{0}; }
};

struct vertex_tag;
struct index_tag;

// A set of vertices of a hypergraph / coatoms of the enveloping algebra.
using VertexSet = BitSet<vertex_tag>;
// A set of edge positions (equivalently, minimal-element indices).
using IndexSet = BitSet<index_tag>;

}  // namespace impalg
