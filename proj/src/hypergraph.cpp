#include "impalg/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace impalg {

namespace detail {

bool is_antichain(std::span<const VertexSet> edges) {
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = 0; j < edges.size(); ++j)
            if (i != j && edges[i].is_subset_of(edges[j])) return false;
    return true;
}

VertexSet union_of(std::span<const VertexSet> edges, IndexSet s) {
    VertexSet u;
    for (int i : s) u = u | edges[i];
    return u;
}

VertexSet intersection_of(std::span<const VertexSet> edges, IndexSet s) {
    VertexSet x = VertexSet{~0u};
    for (int i : s) x = x & edges[i];
    return x;
}

}  // namespace detail

namespace {

void validate(const std::vector<std::string>& names, const std::vector<VertexSet>& edges) {
    const int n = static_cast<int>(names.size());
    if (n > kMaxVertices)
        throw Error(errc::ground_too_large,
                    "hypergraph has " + std::to_string(n) + " vertices, limit is " +
                        std::to_string(kMaxVertices));
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw Error(errc::duplicate_label, "duplicate vertex label '" + names[i] + "'");

    const VertexSet all = VertexSet::full(n);
    VertexSet covered;
    for (size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].empty())
            throw Error(errc::empty_edge, "edge " + std::to_string(i) + " is empty");
        if (!edges[i].is_subset_of(all))
            throw Error(errc::bad_index_set,
                        "edge " + std::to_string(i) + " uses vertices outside the ground set");
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j])
                throw Error(errc::duplicate_edge, "edges " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " are equal as sets");
        covered = covered | edges[i];
    }
    if (covered != all) {
        const int v = *(all - covered).begin();
        throw Error(errc::isolated_vertex, "vertex '" + names[v] + "' lies in no edge",
                    static_cast<std::uint32_t>(v));
    }
}

void check_indices(const Hypergraph& h, IndexSet s) {
    if (!s.is_subset_of(IndexSet::full(h.edge_count())))
        throw Error(errc::bad_index_set, "edge index out of range");
}

}  // namespace

Hypergraph Hypergraph::create(std::vector<std::string> vertex_names,
                              const std::vector<std::vector<std::string>>& edge_labels) {
    std::unordered_map<std::string, int> position;
    for (size_t i = 0; i < vertex_names.size(); ++i) position.emplace(vertex_names[i], i);

    std::vector<VertexSet> edges;
    edges.reserve(edge_labels.size());
    for (const auto& labels : edge_labels) {
        VertexSet e;
        for (const auto& label : labels) {
            auto it = position.find(label);
            if (it == position.end())
                throw Error(errc::unknown_label, "unknown vertex label '" + label + "'");
            e = e.with(it->second);
        }
        edges.push_back(e);
    }
    return from_masks(std::move(vertex_names), std::move(edges));
}

Hypergraph Hypergraph::from_masks(std::vector<std::string> vertex_names,
                                  std::vector<VertexSet> edges) {
    validate(vertex_names, edges);
    Hypergraph h;
    h.vertex_names_ = std::move(vertex_names);
    h.edges_ = std::move(edges);
    return h;
}

bool is_sperner(const Hypergraph& h) { return detail::is_antichain(h.edges()); }

Hypergraph maximal_reduction(const Hypergraph& h) {
    const auto& edges = h.edges();
    std::vector<VertexSet> maximal;
    for (size_t i = 0; i < edges.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < edges.size() && !dominated; ++j)
            if (i != j && edges[i].is_subset_of(edges[j]) && edges[i] != edges[j])
                dominated = true;
        if (!dominated) maximal.push_back(edges[i]);
    }

    // Every edge sits inside some maximal edge, so no vertex can lose its
    // last edge; the renaming below is for the general contract.
    VertexSet used = detail::union_of(maximal, IndexSet::full(static_cast<int>(maximal.size())));
    if (used == h.full_vertex_set())
        return Hypergraph::from_masks(h.vertex_names(), std::move(maximal));

    std::vector<std::string> names;
    std::vector<int> new_index(h.vertex_count(), -1);
    for (int v : used) {
        new_index[v] = static_cast<int>(names.size());
        names.push_back(h.vertex_names()[v]);
    }
    for (auto& e : maximal) {
        VertexSet renamed;
        for (int v : e) renamed = renamed.with(new_index[v]);
        e = renamed;
    }
    return Hypergraph::from_masks(std::move(names), std::move(maximal));
}

int intersection_size(const Hypergraph& h, IndexSet s) {
    if (s.empty()) throw Error(errc::empty_index_set, "intersection over an empty index set");
    check_indices(h, s);
    return detail::intersection_of(h.edges(), s).size();
}

int union_size(const Hypergraph& h, IndexSet s) {
    check_indices(h, s);
    return detail::union_of(h.edges(), s).size();
}

Hypergraph apply_vertex_permutation(const Hypergraph& h, std::span<const int> perm) {
    std::vector<std::string> names(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) names[perm[v]] = h.vertex_names()[v];
    std::vector<VertexSet> edges;
    edges.reserve(h.edges().size());
    for (VertexSet e : h.edges()) {
        VertexSet mapped;
        for (int v : e) mapped = mapped.with(perm[v]);
        edges.push_back(mapped);
    }
    return Hypergraph::from_masks(std::move(names), std::move(edges));
}

}  // namespace impalg
