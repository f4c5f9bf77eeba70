#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "impalg/hypergraph.hpp"

namespace impalg {

// A finite implication algebra, stored through its enveloping Boolean
// algebra 2^ground: the elements are exactly the subsets of ground that
// lie under some set in min_edges, ordered by reverse inclusion. The top
// is the empty set; min_edges are the minimal elements.
//
// Only the antichain of minimal elements is stored; everything else is
// computed on demand.
class ImplicationAlgebra {
public:
    static ImplicationAlgebra from_hypergraph(const Hypergraph& h);

    const std::vector<std::string>& ground() const { return ground_; }
    const std::vector<VertexSet>& min_edges() const { return min_edges_; }
    int ground_size() const { return static_cast<int>(ground_.size()); }
    VertexSet full_ground_set() const { return VertexSet::full(ground_size()); }

    bool is_element(VertexSet x) const;

    bool operator==(const ImplicationAlgebra& other) const = default;

private:
    ImplicationAlgebra() = default;
    std::vector<std::string> ground_;
    std::vector<VertexSet> min_edges_;
};

// Vertices are the coatom labels, one edge per minimal element; the
// result is always Sperner.
Hypergraph to_hypergraph(const ImplicationAlgebra& alg);

// All elements in increasing mask order. The count is cross-checked
// against the inclusion-exclusion value internally. Grounds above 20
// vertices are refused (ground_too_large).
std::vector<VertexSet> elements(const ImplicationAlgebra& alg);

// x -> y in the enveloping-algebra representation: the set difference
// y \ x. Always lands back in the algebra.
VertexSet implies(const ImplicationAlgebra& alg, VertexSet x, VertexSet y);

// Join under reverse inclusion is intersection; always an element.
VertexSet join(const ImplicationAlgebra& alg, VertexSet x, VertexSet y);

// Meet under reverse inclusion is union, which may leave the algebra;
// absent when x ∪ y lies under no minimal element.
std::optional<VertexSet> meet_opt(const ImplicationAlgebra& alg, VertexSet x, VertexSet y);

// The minimal elements, i.e. min_edges.
const std::vector<VertexSet>& minimal_elements(const ImplicationAlgebra& alg);

// The coatoms: all singletons of ground. Equal to the coatoms of the
// enveloping algebra.
std::vector<VertexSet> coatoms(const ImplicationAlgebra& alg);

// Corank of x: length of a maximal chain from x up to the top, which in
// the set representation is just |x|.
int interval_height(const ImplicationAlgebra& alg, VertexSet x);

// Labels of the enveloping algebra's coatoms; env(alg) = 2^ground.
// The envelope is minimal because no coatom is isolated, which forces
// the meet of all minimal elements down to the bottom.
const std::vector<std::string>& enveloping_ground(const ImplicationAlgebra& alg);

// Exhaustively checks the three defining identities of the implication
// operation over all element pairs and triples. Refuses element sets
// larger than 200 (ground_too_large).
bool check_abbott_axioms(const ImplicationAlgebra& alg);

namespace detail {
// The identity check against an arbitrary binary operation, so tests can
// run a mutated operation as a negative control.
bool abbott_identities_hold(std::span<const VertexSet> elems,
                            const std::function<VertexSet(VertexSet, VertexSet)>& op);
}  // namespace detail

}  // namespace impalg
