#include "impalg/profile.hpp"

namespace impalg {

namespace detail {

IndexSet expand_from_complement(IndexSet packed, IndexSet a, int m) {
    IndexSet out;
    int packed_pos = 0;
    for (int i : IndexSet::full(m) - a) {
        if (packed.contains(packed_pos)) out = out.with(i);
        ++packed_pos;
    }
    return out;
}

}  // namespace detail

Profile::Profile(int m) : m_(m) {
    if (m < 1) throw Error(errc::empty_index_set, "a profile needs at least one index");
    if (m > kMaxProfileIndices)
        throw Error(errc::too_many_minimal_elements,
                    "profiles are capped at " + std::to_string(kMaxProfileIndices) + " indices");
    values_.assign(std::size_t{1} << m, 0);
}

namespace {

void check_domain(int m, IndexSet s) {
    if (s.empty()) throw Error(errc::empty_index_set, "the empty set is outside a profile's domain");
    if (!s.is_subset_of(IndexSet::full(m)))
        throw Error(errc::bad_index_set, "subset uses indices outside the profile", s.bits);
}

}  // namespace

int Profile::at(IndexSet s) const {
    check_domain(m_, s);
    return values_[s.bits];
}

void Profile::set(IndexSet s, int value) {
    check_domain(m_, s);
    if (value < 0)
        throw Error(errc::negative_value, "profile values are nonnegative", s.bits);
    values_[s.bits] = value;
}

Profile compute_profile(const ImplicationAlgebra& alg) {
    return profile_at(alg, alg.full_ground_set());
}

Profile profile_at(const ImplicationAlgebra& alg, VertexSet b) {
    if (!b.is_subset_of(alg.full_ground_set()))
        throw Error(errc::bad_index_set, "b uses coatoms outside the ground set", b.bits);
    const auto& edges = alg.min_edges();
    const int m = static_cast<int>(edges.size());
    if (m > kMaxProfileIndices)
        throw Error(errc::too_many_minimal_elements,
                    "profile computation is capped at " + std::to_string(kMaxProfileIndices) +
                        " minimal elements");

    // intersection(S) extends intersection(S minus lowest bit) one edge at
    // a time, so the whole table is one linear pass.
    Profile p(m);
    std::vector<VertexSet> isect(std::size_t{1} << m);
    isect[0] = alg.full_ground_set();
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        const int low = std::countr_zero(s);
        isect[s] = isect[s & (s - 1)] & edges[low];
        p.set(IndexSet{s}, (isect[s] & b).size());
    }
    return p;
}

namespace {

void check_restriction_set(const Profile& p, IndexSet a) {
    if (a.empty())
        throw Error(errc::empty_index_set, "the restriction set must be nonempty");
    const IndexSet full = p.full_index_set();
    if (!a.is_subset_of(full) || a == full)
        throw Error(errc::bad_index_set, "the restriction set must be a proper subset", a.bits);
}

}  // namespace

Profile derive_pA(const Profile& p, IndexSet a) {
    check_restriction_set(p, a);
    const int m = p.index_count();
    Profile out(m - a.size());
    for (std::uint32_t x = 1; x < out.mask_limit(); ++x) {
        const IndexSet orig = detail::expand_from_complement(IndexSet{x}, a, m);
        out.set(IndexSet{x}, p.at(orig | a));
    }
    return out;
}

Profile derive_qA(const Profile& p, IndexSet a) {
    check_restriction_set(p, a);
    const int m = p.index_count();
    Profile out(m - a.size());
    for (std::uint32_t x = 1; x < out.mask_limit(); ++x) {
        const IndexSet orig = detail::expand_from_complement(IndexSet{x}, a, m);
        const int value = p.at(orig) - p.at(orig | a);
        if (value < 0)
            throw Error(errc::negative_value,
                        "q_A went negative; p is not decreasing", orig.bits);
        out.set(IndexSet{x}, value);
    }
    return out;
}

std::optional<PairViolation> is_decreasing(const Profile& p) {
    for (std::uint32_t s2 = 1; s2 < p.mask_limit(); ++s2) {
        // nonzero proper submasks of s2 in increasing numeric order
        for (std::uint32_t s1 = (0u - s2) & s2; s1 != s2; s1 = (s1 - s2) & s2) {
            if (p.at(IndexSet{s1}) < p.at(IndexSet{s2}))
                return PairViolation{IndexSet{s1}, IndexSet{s2}};
        }
    }
    return std::nullopt;
}

std::optional<PairViolation> is_paper_submodular(const Profile& p) {
    for (std::uint32_t s1 = 1; s1 < p.mask_limit(); ++s1) {
        for (std::uint32_t s2 = s1 + 1; s2 < p.mask_limit(); ++s2) {
            if ((s1 & s2) == 0) continue;
            const int lhs = p.at(IndexSet{s1}) + p.at(IndexSet{s2});
            const int rhs = p.at(IndexSet{s1 | s2}) + p.at(IndexSet{s1 & s2});
            if (lhs > rhs) return PairViolation{IndexSet{s1}, IndexSet{s2}};
        }
    }
    return std::nullopt;
}

const char* clause_name(Clause c) {
    switch (c) {
        case Clause::none: return "none";
        case Clause::p_decreasing: return "p decreasing";
        case Clause::p_submodular: return "p submodular";
        case Clause::pa_decreasing: return "p_A decreasing";
        case Clause::pa_submodular: return "p_A submodular";
        case Clause::qa_decreasing: return "q_A decreasing";
        case Clause::qa_submodular: return "q_A submodular";
    }
    return "none";
}

RealizabilityVerdict check_realizability_conditions(const Profile& p) {
    if (auto v = is_decreasing(p))
        return {false, Clause::p_decreasing, IndexSet{}, v->s1, v->s2};
    if (auto v = is_paper_submodular(p))
        return {false, Clause::p_submodular, IndexSet{}, v->s1, v->s2};

    const int m = p.index_count();
    for (std::uint32_t a_mask = 1; a_mask + 1 < p.mask_limit(); ++a_mask) {
        const IndexSet a{a_mask};
        const Profile pa = derive_pA(p, a);
        // q_A cannot go negative here: p was just verified decreasing.
        const Profile qa = derive_qA(p, a);
        auto expand = [&](IndexSet s) { return detail::expand_from_complement(s, a, m); };
        if (auto v = is_decreasing(pa))
            return {false, Clause::pa_decreasing, a, expand(v->s1), expand(v->s2)};
        if (auto v = is_paper_submodular(pa))
            return {false, Clause::pa_submodular, a, expand(v->s1), expand(v->s2)};
        if (auto v = is_decreasing(qa))
            return {false, Clause::qa_decreasing, a, expand(v->s1), expand(v->s2)};
        if (auto v = is_paper_submodular(qa))
            return {false, Clause::qa_submodular, a, expand(v->s1), expand(v->s2)};
    }
    return {true, Clause::none, IndexSet{}, IndexSet{}, IndexSet{}};
}

}  // namespace impalg
