#include "impalg/polymatroid.hpp"

#include <limits>

namespace impalg {

PolymatroidFn::PolymatroidFn(int m) : m_(m) {
    if (m < 1) throw Error(errc::empty_index_set, "a polymatroid table needs at least one index");
    if (m > kMaxProfileIndices)
        throw Error(errc::too_many_minimal_elements,
                    "polymatroid tables are capped at " + std::to_string(kMaxProfileIndices) +
                        " indices");
    values_.assign(std::size_t{1} << m, 0);
}

int PolymatroidFn::at(IndexSet s) const {
    if (!s.is_subset_of(full_index_set()))
        throw Error(errc::bad_index_set, "subset uses indices outside the table", s.bits);
    return values_[s.bits];
}

void PolymatroidFn::set(IndexSet s, int value) {
    if (!s.is_subset_of(full_index_set()))
        throw Error(errc::bad_index_set, "subset uses indices outside the table", s.bits);
    if (s.empty() && value != 0)
        throw Error(errc::empty_value_nonzero, "the empty set must map to 0");
    if (value < 0)
        throw Error(errc::negative_value, "polymatroid values are nonnegative", s.bits);
    values_[s.bits] = value;
}

PolymatroidFn rho_of_hypergraph(const Hypergraph& h) {
    if (h.edge_count() > kMaxProfileIndices)
        throw Error(errc::too_many_edges, "rho is capped at " +
                                              std::to_string(kMaxProfileIndices) + " edges");
    return rho_of_family(h.edges());
}

PolymatroidFn rho_of_family(std::span<const VertexSet> edges) {
    const int m = static_cast<int>(edges.size());
    if (m > kMaxProfileIndices)
        throw Error(errc::too_many_edges, "rho is capped at " +
                                              std::to_string(kMaxProfileIndices) + " edges");
    PolymatroidFn r(m);
    std::vector<VertexSet> uni(std::size_t{1} << m);
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        const int low = std::countr_zero(s);
        uni[s] = uni[s & (s - 1)] | edges[low];
        r.set(IndexSet{s}, uni[s].size());
    }
    return r;
}

namespace {

// The alternating sum over nonempty T ⊆ S of (-1)^(|T|+1) g(T), for every
// S at once: a zeta transform of the signed terms. Both transform
// directions are this same map; g(∅) is treated as 0.
std::vector<std::int64_t> alternating_transform(const std::vector<std::int64_t>& g, int m) {
    std::vector<std::int64_t> acc(g.size());
    for (std::uint32_t t = 1; t < (1u << m); ++t)
        acc[t] = (std::popcount(t) % 2 == 1) ? g[t] : -g[t];
    acc[0] = 0;
    for (int i = 0; i < m; ++i)
        for (std::uint32_t s = 0; s < (1u << m); ++s)
            if (s & (1u << i)) acc[s] += acc[s & ~(1u << i)];
    return acc;
}

int narrow_checked(std::int64_t v, std::uint32_t mask, errc on_negative) {
    if (v < 0)
        throw Error(on_negative, "alternating sum went negative at subset " +
                                     std::to_string(mask), mask);
    if (v > std::numeric_limits<int>::max())
        throw Error(errc::too_large, "alternating sum overflowed at subset " +
                                         std::to_string(mask), mask);
    return static_cast<int>(v);
}

}  // namespace

PolymatroidFn rho_from_profile(const Profile& p) {
    const int m = p.index_count();
    std::vector<std::int64_t> g(std::size_t{1} << m, 0);
    for (std::uint32_t s = 1; s < (1u << m); ++s) g[s] = p.at(IndexSet{s});
    const auto sums = alternating_transform(g, m);
    PolymatroidFn r(m);
    for (std::uint32_t s = 1; s < (1u << m); ++s)
        r.set(IndexSet{s}, narrow_checked(sums[s], s, errc::negative_result));
    return r;
}

Profile profile_from_rho(const PolymatroidFn& r) {
    // r(∅) = 0 is structural for PolymatroidFn, so the precondition holds.
    const int m = r.index_count();
    std::vector<std::int64_t> g(std::size_t{1} << m, 0);
    for (std::uint32_t s = 1; s < (1u << m); ++s) g[s] = r.at(IndexSet{s});
    const auto sums = alternating_transform(g, m);
    Profile p(m);
    for (std::uint32_t s = 1; s < (1u << m); ++s)
        p.set(IndexSet{s}, narrow_checked(sums[s], s, errc::negative_result));
    return p;
}

const char* polymatroid_axiom_name(PolymatroidAxiom a) {
    switch (a) {
        case PolymatroidAxiom::normalization: return "normalization";
        case PolymatroidAxiom::monotonicity: return "monotonicity";
        case PolymatroidAxiom::submodularity: return "submodularity";
    }
    return "normalization";
}

std::optional<PolymatroidViolation> is_polymatroid(const PolymatroidFn& r) {
    if (r.at(IndexSet{}) != 0)
        return PolymatroidViolation{PolymatroidAxiom::normalization, IndexSet{}, IndexSet{}};
    for (std::uint32_t s2 = 1; s2 < r.mask_limit(); ++s2) {
        for (std::uint32_t s1 = 0; s1 != s2; s1 = (s1 - s2) & s2) {
            if (r.at(IndexSet{s1}) > r.at(IndexSet{s2}))
                return PolymatroidViolation{PolymatroidAxiom::monotonicity, IndexSet{s1},
                                            IndexSet{s2}};
        }
    }
    for (std::uint32_t s1 = 0; s1 < r.mask_limit(); ++s1) {
        for (std::uint32_t s2 = s1 + 1; s2 < r.mask_limit(); ++s2) {
            const int lhs = r.at(IndexSet{s1}) + r.at(IndexSet{s2});
            const int rhs = r.at(IndexSet{s1 | s2}) + r.at(IndexSet{s1 & s2});
            if (lhs < rhs)
                return PolymatroidViolation{PolymatroidAxiom::submodularity, IndexSet{s1},
                                            IndexSet{s2}};
        }
    }
    return std::nullopt;
}

RecognitionResult recognize_boolean(const PolymatroidFn& r) {
    RecognitionResult out;

    if (auto v = is_polymatroid(r)) {
        out.status = RecognitionResult::Status::rejected_axioms;
        out.stage = 1;
        out.axiom_violation = *v;
        return out;
    }

    Profile p(r.index_count());
    try {
        p = profile_from_rho(r);
    } catch (const Error& e) {
        if (e.code() != errc::negative_result) throw;
        out.status = RecognitionResult::Status::rejected_negative;
        out.stage = 2;
        out.negative_at = IndexSet{e.detail()};
        return out;
    }

    const RealizabilityVerdict verdict = check_realizability_conditions(p);
    if (!verdict.pass) {
        out.status = RecognitionResult::Status::rejected_conditions;
        out.stage = 3;
        out.condition_verdict = verdict;
        return out;
    }

    // Stages 1-3 passed, so by the characterization stages 4-5 cannot
    // fail; if they do, that is evidence against it and is labeled so.
    try {
        out.family = realize(p);
    } catch (const Error& e) {
        out.status = RecognitionResult::Status::internal_inconsistency;
        out.stage = 4;
        out.detail = std::string(errc_name(e.code())) + ": " + e.what();
        return out;
    }

    const PolymatroidFn achieved = rho_of_family(out.family.edges);
    for (std::uint32_t s = 0; s < r.mask_limit(); ++s) {
        if (achieved.at(IndexSet{s}) != r.at(IndexSet{s})) {
            out.status = RecognitionResult::Status::internal_inconsistency;
            out.stage = 5;
            out.detail = "realized family disagrees with the input at subset " +
                         std::to_string(s) + " (" + std::to_string(achieved.at(IndexSet{s})) +
                         " vs " + std::to_string(r.at(IndexSet{s})) + ")";
            return out;
        }
    }

    out.status = RecognitionResult::Status::recognized;
    out.stage = 0;
    out.degeneracy = analyze_degeneracy(out.family);
    return out;
}

}  // namespace impalg
