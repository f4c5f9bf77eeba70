#pragma once

#include <utility>
#include <vector>

#include "impalg/hypergraph.hpp"
#include "impalg/profile.hpp"

namespace impalg {

// An indexed edge family over a fresh ground set {0..ground_size-1}.
// Unlike a Hypergraph, edges may coincide, nest, or be empty: a profile
// can force that, and hiding it would misreport the synthesis.
struct RealizedFamily {
    int ground_size = 0;
    std::vector<VertexSet> edges;  // one per profile index
};

// How the realized family fails to be a strict Sperner hypergraph.
struct DegeneracyReport {
    std::vector<std::vector<int>> coinciding;       // index groups with identical edges (size >= 2)
    std::vector<std::pair<int, int>> nested;        // (i, j) with edge i properly inside edge j
    std::vector<int> empty_edges;                   // indices whose edge is empty
    int distinct_maximal = 0;

    bool degenerate() const {
        return !coinciding.empty() || !nested.empty() || !empty_edges.empty();
    }
};

DegeneracyReport analyze_degeneracy(const RealizedFamily& family);

// Builds an edge family whose intersection profile is exactly p, by the
// recursive split on the lowest index b: the part of every other edge
// inside e_b realizes p_{b}, the part outside realizes q_{b}, and fresh
// vertices are allocated inside-before-outside so identical inputs give
// identical outputs. The ground set never exceeds the sum of the
// singleton values and comes back trimmed to the vertices in use.
//
// Preconditions: check_realizability_conditions(p) passes
// (conditions_fail otherwise). The result is verified against p over
// every nonempty subset before it is returned (verification_fail), and
// the recursion refuses an inside part that does not fit in e_b
// (inside_overflow); neither has been observed for a condition-passing p.
RealizedFamily realize(const Profile& p);

struct RealizationResult {
    Hypergraph hypergraph;     // distinct maximal nonempty edges, vertices v0, v1, ...
    DegeneracyReport report;
    RealizedFamily family;
};

// realize() plus the strict view: the hypergraph of distinct maximal
// edges together with the degeneracy report that says what was merged
// or dropped on the way.
RealizationResult realize_to_hypergraph(const Profile& p);

}  // namespace impalg
