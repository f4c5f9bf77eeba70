#pragma once

#include <span>
#include <string>
#include <vector>

#include "impalg/errors.hpp"
#include "impalg/sets.hpp"

namespace impalg {

inline constexpr int kMaxVertices = 30;

// A finite vertex set plus an ordered list of distinct nonempty edges.
// Edges keep the positions they were given: profiles and polymatroid
// tables are indexed by edge position, not by edge identity.
//
// Invariants enforced at construction:
//   - vertex names are distinct, at most kMaxVertices of them
//   - every edge is a nonempty subset of the vertex set
//   - no two edges are equal as sets
//   - no isolated vertices (every vertex lies in some edge)
//   - an empty edge list is allowed only for the empty vertex list
class Hypergraph {
public:
    // Edges given as lists of vertex names.
    static Hypergraph create(std::vector<std::string> vertex_names,
                             const std::vector<std::vector<std::string>>& edge_labels);
    // Edges given as masks over the name list.
    static Hypergraph from_masks(std::vector<std::string> vertex_names,
                                 std::vector<VertexSet> edges);

    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    VertexSet full_vertex_set() const { return VertexSet::full(vertex_count()); }

    bool operator==(const Hypergraph& other) const = default;

private:
    Hypergraph() = default;
    std::vector<std::string> vertex_names_;
    std::vector<VertexSet> edges_;
};

// True iff no edge is contained in a different edge.
bool is_sperner(const Hypergraph& h);

// Keeps exactly the inclusion-maximal edges, in their original order.
// Every vertex lies in some maximal edge, so none becomes isolated.
Hypergraph maximal_reduction(const Hypergraph& h);

// |intersection of the edges indexed by s|; s must be nonempty.
int intersection_size(const Hypergraph& h, IndexSet s);

// |union of the edges indexed by s|; 0 for the empty s.
int union_size(const Hypergraph& h, IndexSet s);

// The hypergraph with vertex v renamed to position perm[v] (perm is a
// permutation of 0..n-1); edge order is unchanged.
Hypergraph apply_vertex_permutation(const Hypergraph& h, std::span<const int> perm);

namespace detail {
// Mask-level helpers shared with the enumerator and the synthesizer.
bool is_antichain(std::span<const VertexSet> edges);
VertexSet union_of(std::span<const VertexSet> edges, IndexSet s);
VertexSet intersection_of(std::span<const VertexSet> edges, IndexSet s);
}  // namespace detail

}  // namespace impalg
