#pragma once

#include <functional>
#include <vector>

#include "impalg/hypergraph.hpp"

namespace impalg {

// Exhaustive generator for the small test corpus.
//
// Visits every valid hypergraph with 1..max_vertices vertices (named
// "a", "b", ...) and 1..max_edges edges, edges listed in increasing mask
// order. With sperner_only, edge lists are restricted to antichains.
// With dedup, only one representative per vertex-relabeling class is
// visited. Deterministic order: by vertex count, then edge count, then
// lexicographic edge-mask sequence.
//
// Throws bounds_too_large when the requested bounds exceed the caps
// (defaults: 6 vertices, 4 edges).
void enumerate_hypergraphs(int max_vertices, int max_edges, bool sperner_only,
                           const std::function<void(const Hypergraph&)>& visit,
                           bool dedup = true, int vertex_cap = 6, int edge_cap = 4);

std::vector<Hypergraph> enumerate_hypergraphs(int max_vertices, int max_edges,
                                              bool sperner_only, bool dedup = true,
                                              int vertex_cap = 6, int edge_cap = 4);

}  // namespace impalg
