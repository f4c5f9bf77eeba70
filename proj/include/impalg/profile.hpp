#pragma once

#include <optional>
#include <vector>

#include "impalg/algebra.hpp"

namespace impalg {

inline constexpr int kMaxProfileIndices = 20;

// Total map from the nonempty subsets of {0..m-1} to nonnegative
// integers, stored densely by subset bitmask. The empty set is outside
// the domain.
class Profile {
public:
    explicit Profile(int m);

    int index_count() const { return m_; }
    IndexSet full_index_set() const { return IndexSet::full(m_); }
    std::uint32_t mask_limit() const { return 1u << m_; }

    int at(IndexSet s) const;
    void set(IndexSet s, int value);

    bool operator==(const Profile& other) const = default;

private:
    int m_;
    std::vector<int> values_;  // slot 0 unused
};

// p(S) = |intersection of the minimal elements indexed by S|, the height
// of [join of S, top]. Matches intersection_size on to_hypergraph(alg).
Profile compute_profile(const ImplicationAlgebra& alg);

// Profile relative to an arbitrary enveloping-algebra element, given by
// its coatom set: p_b(S) = |(intersection over S) ∩ b|. The full ground
// set gives compute_profile back; the empty set gives the zero profile.
Profile profile_at(const ImplicationAlgebra& alg, VertexSet b);

// Restriction to the indices outside a: value at X is p(X ∪ a).
// The surviving indices are renumbered in increasing order; a must be a
// nonempty proper subset of the index set.
Profile derive_pA(const Profile& p, IndexSet a);

// Complementary part: value at X is p(X) - p(X ∪ a). Negative entries
// are reported (negative_value with the offending X), not clamped; they
// cannot occur when p is decreasing.
Profile derive_qA(const Profile& p, IndexSet a);

// Witness pair for a failed order or submodularity scan.
struct PairViolation {
    IndexSet s1;
    IndexSet s2;
    bool operator==(const PairViolation&) const = default;
};

// Checks p(S1) >= p(S2) for all nonempty S1 ⊆ S2. Returns the first
// violation, scanning S2 then S1 in increasing mask order.
std::optional<PairViolation> is_decreasing(const Profile& p);

// Checks p(S1) + p(S2) <= p(S1 ∪ S2) + p(S1 ∩ S2) over non-disjoint
// pairs. This is the inequality in the displayed direction, which is the
// reverse of the usual polymatroid convention; it is called
// "paper-submodular" everywhere to keep the sign honest. Returns the
// first violation, scanning S1 < S2 in increasing mask order.
std::optional<PairViolation> is_paper_submodular(const Profile& p);

enum class Clause {
    none,
    p_decreasing,
    p_submodular,
    pa_decreasing,
    pa_submodular,
    qa_decreasing,
    qa_submodular,
};

const char* clause_name(Clause c);

struct RealizabilityVerdict {
    bool pass = false;
    Clause clause = Clause::none;
    IndexSet a;        // offending restriction set; empty for the p-level clauses
    IndexSet s1, s2;   // witness pair, in the original index space
};

// The realizability test: p itself, and every p_A and q_A, must be
// decreasing and paper-submodular. A is scanned in increasing bitmask
// order (p_A decreasing, p_A submodular, q_A decreasing, q_A submodular
// within each A) and the first violated clause is reported.
RealizabilityVerdict check_realizability_conditions(const Profile& p);

namespace detail {
// Maps a mask over the renumbered indices of M \ a back to original indices.
IndexSet expand_from_complement(IndexSet packed, IndexSet a, int m);
}  // namespace detail

}  // namespace impalg
