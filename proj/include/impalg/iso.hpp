#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "impalg/algebra.hpp"
#include "impalg/profile.hpp"

namespace impalg {

// A bijection between the two algebras' minimal-element index sets under
// which the profiles agree on every nonempty subset. Verified in full on
// construction; by the profile characterization this certifies that the
// algebras are isomorphic.
class IsoWitness {
public:
    static std::optional<IsoWitness> verify(const Profile& p1, const Profile& p2,
                                            std::span<const int> image);

    // (index in I1, index in I2) pairs, sorted by the first component.
    const std::vector<std::pair<int, int>>& mapping() const { return mapping_; }

private:
    IsoWitness() = default;
    std::vector<std::pair<int, int>> mapping_;
};

// Backtracking search for a profile-preserving bijection of the
// minimal-element indices. Candidates are pruned by singleton profile
// values and by the multiset of incident pair values; assignment order
// is by (singleton value, sorted incident-pair vector) descending with
// index ties, so runs are deterministic. The full profile equality is
// re-verified at every leaf.
std::optional<IsoWitness> algebra_iso(const ImplicationAlgebra& i1,
                                      const ImplicationAlgebra& i2);

// Hypergraph isomorphism via the algebra test. Non-Sperner inputs are
// maximal-reduced first. The vertex counts are compared separately: the
// profile only sees vertices inside edges, and with no isolated vertices
// that makes |V1| = |V2| a cheap exact pre-filter.
bool hypergraph_iso(const Hypergraph& h1, const Hypergraph& h2);

// Independent oracle: brute-force search for an order-preserving
// bijection between the explicit element posets, pruned by corank level.
// Refuses element sets larger than 12 (too_large). Must agree with
// algebra_iso wherever both run; the test corpus asserts that.
bool poset_iso_oracle(const ImplicationAlgebra& i1, const ImplicationAlgebra& i2);

}  // namespace impalg
