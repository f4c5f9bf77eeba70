#include "impalg/synth.hpp"

#include <algorithm>
#include <map>

namespace impalg {

DegeneracyReport analyze_degeneracy(const RealizedFamily& family) {
    DegeneracyReport report;
    const int m = static_cast<int>(family.edges.size());

    std::map<std::uint32_t, std::vector<int>> by_edge;
    std::vector<std::uint32_t> first_seen;
    for (int i = 0; i < m; ++i) {
        auto [it, fresh] = by_edge.try_emplace(family.edges[i].bits);
        if (fresh) first_seen.push_back(family.edges[i].bits);
        it->second.push_back(i);
    }
    for (std::uint32_t bits : first_seen)
        if (by_edge[bits].size() >= 2) report.coinciding.push_back(by_edge[bits]);

    for (int i = 0; i < m; ++i) {
        if (family.edges[i].empty()) {
            // reported in its own field; listing it as nested in every
            // nonempty edge would only repeat the fact
            report.empty_edges.push_back(i);
            continue;
        }
        for (int j = 0; j < m; ++j)
            if (i != j && family.edges[i] != family.edges[j] &&
                family.edges[i].is_subset_of(family.edges[j]))
                report.nested.emplace_back(i, j);
    }

    for (std::uint32_t bits : first_seen) {
        if (bits == 0) continue;
        bool maximal = true;
        for (std::uint32_t other : first_seen)
            if (other != bits && (bits & ~other) == 0) maximal = false;
        if (maximal) ++report.distinct_maximal;
    }
    return report;
}

namespace {

// The construction itself, with no condition checking: the caller has
// verified the conditions, and the final profile verification decides
// whether the output stands.
RealizedFamily realize_rec(const Profile& p) {
    const int m = p.index_count();
    const int head = p.at(IndexSet::singleton(0));
    if (m == 1) return {head, {VertexSet::full(head)}};

    // Split on b = index 0: inside parts live in e_b, outside parts on
    // vertices allocated after e_b's block.
    const IndexSet b = IndexSet::singleton(0);
    const RealizedFamily inside = realize_rec(derive_pA(p, b));
    if (inside.ground_size > head)
        throw Error(errc::inside_overflow,
                    "inside family needs " + std::to_string(inside.ground_size) +
                        " vertices but e_0 has " + std::to_string(head),
                    static_cast<std::uint32_t>(inside.ground_size));
    const RealizedFamily outside = realize_rec(derive_qA(p, b));

    // Both recursive grounds are compact, so embedding the inside family
    // is the identity into e_0 = {0..head-1} and the outside family is a
    // plain shift past it.
    RealizedFamily out;
    out.ground_size = head + outside.ground_size;
    out.edges.reserve(m);
    out.edges.push_back(VertexSet::full(head));
    for (int i = 0; i + 1 < m; ++i)
        out.edges.push_back(inside.edges[i] | VertexSet{outside.edges[i].bits << head});
    return out;
}

}  // namespace

RealizedFamily realize(const Profile& p) {
    const RealizabilityVerdict verdict = check_realizability_conditions(p);
    if (!verdict.pass)
        throw Error(errc::conditions_fail,
                    std::string("profile fails the realizability conditions (") +
                        clause_name(verdict.clause) + ")");

    const RealizedFamily family = realize_rec(p);

    VertexSet used;
    for (VertexSet e : family.edges) used = used | e;
    if (used != VertexSet::full(family.ground_size))
        throw Error(errc::verification_fail, "realized ground is not compact");
    for (std::uint32_t s = 1; s < p.mask_limit(); ++s) {
        const VertexSet isect = detail::intersection_of(family.edges, IndexSet{s});
        if ((isect & used).size() != p.at(IndexSet{s}))
            throw Error(errc::verification_fail,
                        "realized profile disagrees with the input at subset " +
                            std::to_string(s),
                        s);
    }
    return family;
}

RealizationResult realize_to_hypergraph(const Profile& p) {
    RealizationResult result{Hypergraph::from_masks({}, {}), {}, realize(p)};
    result.report = analyze_degeneracy(result.family);

    // strict view: distinct maximal nonempty edges, original order
    std::vector<VertexSet> kept;
    for (VertexSet e : result.family.edges) {
        if (e.empty()) continue;
        bool dominated = false;
        for (VertexSet other : result.family.edges)
            if (other != e && e.is_subset_of(other)) dominated = true;
        if (!dominated && std::find(kept.begin(), kept.end(), e) == kept.end())
            kept.push_back(e);
    }
    std::vector<std::string> names;
    names.reserve(result.family.ground_size);
    for (int v = 0; v < result.family.ground_size; ++v)
        names.push_back("v" + std::to_string(v));
    result.hypergraph = Hypergraph::from_masks(std::move(names), std::move(kept));
    return result;
}

}  // namespace impalg
