#pragma once

#include <optional>
#include <vector>

#include "impalg/profile.hpp"
#include "impalg/synth.hpp"

namespace impalg {

// Total map from all subsets of {0..m-1} to nonnegative integers,
// stored densely by subset bitmask. By convention the empty set maps to
// 0; the constructor initializes it that way and is_polymatroid checks it.
class PolymatroidFn {
public:
    explicit PolymatroidFn(int m);

    int index_count() const { return m_; }
    IndexSet full_index_set() const { return IndexSet::full(m_); }
    std::uint32_t mask_limit() const { return 1u << m_; }

    int at(IndexSet s) const;
    void set(IndexSet s, int value);

    bool operator==(const PolymatroidFn& other) const = default;

private:
    int m_;
    std::vector<int> values_;
};

// rho(S) = |union of the edges indexed by S|. At most 20 edges
// (too_many_edges).
PolymatroidFn rho_of_hypergraph(const Hypergraph& h);

// Same, for a raw indexed family (duplicates and empty edges allowed).
PolymatroidFn rho_of_family(std::span<const VertexSet> edges);

// The alternating transform rho(S) = sum over nonempty T ⊆ S of
// (-1)^(|T|+1) p(T), with rho(∅) = 0. A negative entry means p was not a
// profile and is reported as negative_result with the offending S.
PolymatroidFn rho_from_profile(const Profile& p);

// The inverse direction is the same alternating transform applied to
// rho. It is validated against direct intersection sizes by the test
// corpus rather than assumed. Requires r(∅) = 0 (empty_value_nonzero).
Profile profile_from_rho(const PolymatroidFn& r);

enum class PolymatroidAxiom { normalization, monotonicity, submodularity };

const char* polymatroid_axiom_name(PolymatroidAxiom a);

struct PolymatroidViolation {
    PolymatroidAxiom axiom;
    IndexSet s1, s2;  // for normalization both are empty
};

// The standard axioms: r(∅) = 0, r monotone under inclusion, and
// r(S1) + r(S2) >= r(S1 ∪ S2) + r(S1 ∩ S2) for ALL pairs (the usual
// direction, unlike the profile-side inequality). Returns the first
// violation: normalization, then monotonicity scanning S2 then S1 ⊂ S2
// ascending, then submodularity scanning S1 < S2 ascending.
std::optional<PolymatroidViolation> is_polymatroid(const PolymatroidFn& r);

// Outcome of recognize_boolean. Stages: 1 polymatroid axioms,
// 2 nonnegative inverse transform, 3 realizability conditions,
// 4 synthesis, 5 exact rho match. A failure at stage 4 or 5 after
// stages 1-3 passed would contradict the characterization and is
// surfaced as internal_inconsistency rather than a plain rejection.
struct RecognitionResult {
    enum class Status {
        recognized,
        rejected_axioms,        // stage 1
        rejected_negative,      // stage 2
        rejected_conditions,    // stage 3
        internal_inconsistency, // stage 4 or 5
    };

    Status status = Status::internal_inconsistency;
    int stage = 0;  // 0 on success, else the failing stage

    // success payload
    RealizedFamily family;
    DegeneracyReport degeneracy;

    // rejection payloads
    std::optional<PolymatroidViolation> axiom_violation;   // stage 1
    std::optional<IndexSet> negative_at;                   // stage 2
    std::optional<RealizabilityVerdict> condition_verdict; // stage 3
    std::string detail;                                    // stages 4-5

    bool recognized() const { return status == Status::recognized; }
};

// Decides whether r is the union-size function of some indexed edge
// family, and produces such a family when it is. The family's rho is
// checked against r entry by entry before success is reported, so a
// recognized result is sound by construction. When the family has
// coinciding or nested edges only the indexed reading applies; the
// degeneracy report says so.
RecognitionResult recognize_boolean(const PolymatroidFn& r);

}  // namespace impalg
