#include "impalg/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace impalg {

namespace {

// True when the sorted mask list is lexicographically minimal among all
// vertex relabelings. Enumerating in ascending order and keeping exactly
// the self-canonical lists visits one representative per class without
// storing anything.
bool is_canonical(const std::vector<VertexSet>& masks, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> mapped(masks.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (size_t i = 0; i < masks.size(); ++i) {
            std::uint32_t out = 0;
            for (int v : masks[i]) out |= 1u << perm[v];
            mapped[i] = out;
        }
        std::sort(mapped.begin(), mapped.end());
        for (size_t i = 0; i < masks.size(); ++i) {
            if (mapped[i] != masks[i].bits) {
                if (mapped[i] < masks[i].bits) return false;
                break;
            }
        }
    }
    return true;
}

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int v = 0; v < n; ++v) names.push_back(std::string(1, static_cast<char>('a' + v)));
    return names;
}

}  // namespace

void enumerate_hypergraphs(int max_vertices, int max_edges, bool sperner_only,
                           const std::function<void(const Hypergraph&)>& visit, bool dedup,
                           int vertex_cap, int edge_cap) {
    if (max_vertices < 1 || max_vertices > vertex_cap)
        throw Error(errc::bounds_too_large,
                    "vertex bound " + std::to_string(max_vertices) + " outside 1.." +
                        std::to_string(vertex_cap));
    if (max_edges < 1 || max_edges > edge_cap)
        throw Error(errc::bounds_too_large, "edge bound " + std::to_string(max_edges) +
                                                " outside 1.." + std::to_string(edge_cap));

    for (int n = 1; n <= max_vertices; ++n) {
        const auto names = default_names(n);
        const std::uint32_t limit = 1u << n;
        const VertexSet all = VertexSet::full(n);
        for (int k = 1; k <= max_edges; ++k) {
            // k-combinations of the nonempty masks, ascending, so the edge
            // list of every visited hypergraph is itself ascending.
            std::vector<VertexSet> chosen;
            auto extend = [&](auto&& self, std::uint32_t next_mask) -> void {
                if (static_cast<int>(chosen.size()) == k) {
                    if (detail::union_of(chosen, IndexSet::full(k)) != all) return;
                    if (sperner_only && !detail::is_antichain(chosen)) return;
                    if (dedup && !is_canonical(chosen, n)) return;
                    visit(Hypergraph::from_masks(names, chosen));
                    return;
                }
                for (std::uint32_t mask = next_mask; mask < limit; ++mask) {
                    chosen.push_back(VertexSet{mask});
                    self(self, mask + 1);
                    chosen.pop_back();
                }
            };
            extend(extend, 1);
        }
    }
}

std::vector<Hypergraph> enumerate_hypergraphs(int max_vertices, int max_edges, bool sperner_only,
                                              bool dedup, int vertex_cap, int edge_cap) {
    std::vector<Hypergraph> out;
    enumerate_hypergraphs(
        max_vertices, max_edges, sperner_only, [&](const Hypergraph& h) { out.push_back(h); },
        dedup, vertex_cap, edge_cap);
    return out;
}

}  // namespace impalg
