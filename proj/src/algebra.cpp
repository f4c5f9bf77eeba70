#include "impalg/algebra.hpp"

#include <cstdint>

namespace impalg {

namespace detail {

bool abbott_identities_hold(std::span<const VertexSet> elems,
                            const std::function<VertexSet(VertexSet, VertexSet)>& op) {
    for (VertexSet a : elems) {
        for (VertexSet b : elems) {
            if (op(op(a, b), a) != a) return false;
            if (op(op(a, b), b) != op(op(b, a), a)) return false;
        }
    }
    for (VertexSet a : elems)
        for (VertexSet b : elems)
            for (VertexSet c : elems)
                if (op(a, op(b, c)) != op(b, op(a, c))) return false;
    return true;
}

}  // namespace detail

ImplicationAlgebra ImplicationAlgebra::from_hypergraph(const Hypergraph& h) {
    if (h.edge_count() == 0)
        throw Error(errc::empty_algebra, "an algebra needs at least one minimal element");
    // Non-maximal edges are invisible to the algebra (they are not minimal
    // elements), so they are normalized away rather than rejected.
    const Hypergraph reduced = is_sperner(h) ? h : maximal_reduction(h);
    ImplicationAlgebra alg;
    alg.ground_ = reduced.vertex_names();
    alg.min_edges_ = reduced.edges();
    return alg;
}

bool ImplicationAlgebra::is_element(VertexSet x) const {
    for (VertexSet e : min_edges_)
        if (x.is_subset_of(e)) return true;
    return false;
}

Hypergraph to_hypergraph(const ImplicationAlgebra& alg) {
    return Hypergraph::from_masks(alg.ground(), alg.min_edges());
}

std::vector<VertexSet> elements(const ImplicationAlgebra& alg) {
    const int n = alg.ground_size();
    if (n > 20)
        throw Error(errc::ground_too_large,
                    "element enumeration refuses grounds above 20 vertices");
    const int m = static_cast<int>(alg.min_edges().size());
    if (m > 20)
        throw Error(errc::too_many_minimal_elements,
                    "element enumeration refuses more than 20 minimal elements");

    std::vector<bool> seen(std::size_t{1} << n, false);
    for (VertexSet e : alg.min_edges()) {
        // all submasks of e, including 0
        std::uint32_t sub = e.bits;
        while (true) {
            seen[sub] = true;
            if (sub == 0) break;
            sub = (sub - 1) & e.bits;
        }
    }
    std::vector<VertexSet> out;
    for (std::uint32_t x = 0; x < (1u << n); ++x)
        if (seen[x]) out.push_back(VertexSet{x});

    // |union of downsets| by inclusion-exclusion over the edge subsets;
    // a mismatch would mean the downset walk above is broken.
    std::int64_t expected = 0;
    for (std::uint32_t s = 1; s < (1u << m); ++s) {
        const VertexSet isect = detail::intersection_of(alg.min_edges(), IndexSet{s});
        const std::int64_t term = std::int64_t{1} << isect.size();
        expected += (std::popcount(s) % 2 == 1) ? term : -term;
    }
    if (expected != static_cast<std::int64_t>(out.size()))
        throw Error(errc::verification_fail, "element count disagrees with inclusion-exclusion");
    return out;
}

namespace {

VertexSet require_element(const ImplicationAlgebra& alg, VertexSet x) {
    if (!alg.is_element(x))
        throw Error(errc::not_an_element, "operand lies under no minimal element", x.bits);
    return x;
}

}  // namespace

VertexSet implies(const ImplicationAlgebra& alg, VertexSet x, VertexSet y) {
    require_element(alg, x);
    require_element(alg, y);
    return y - x;
}

VertexSet join(const ImplicationAlgebra& alg, VertexSet x, VertexSet y) {
    require_element(alg, x);
    require_element(alg, y);
    return x & y;
}

std::optional<VertexSet> meet_opt(const ImplicationAlgebra& alg, VertexSet x, VertexSet y) {
    require_element(alg, x);
    require_element(alg, y);
    const VertexSet u = x | y;
    if (alg.is_element(u)) return u;
    return std::nullopt;
}

const std::vector<VertexSet>& minimal_elements(const ImplicationAlgebra& alg) {
    return alg.min_edges();
}

std::vector<VertexSet> coatoms(const ImplicationAlgebra& alg) {
    std::vector<VertexSet> out;
    out.reserve(alg.ground_size());
    for (int v = 0; v < alg.ground_size(); ++v) out.push_back(VertexSet::singleton(v));
    return out;
}

int interval_height(const ImplicationAlgebra& alg, VertexSet x) {
    return require_element(alg, x).size();
}

const std::vector<std::string>& enveloping_ground(const ImplicationAlgebra& alg) {
    return alg.ground();
}

bool check_abbott_axioms(const ImplicationAlgebra& alg) {
    const std::vector<VertexSet> elems = elements(alg);
    if (elems.size() > 200)
        throw Error(errc::ground_too_large,
                    "axiom check refuses element sets larger than 200");
    // Arguments and results stay inside the element set, so the raw set
    // difference is exactly what implies() computes after validation.
    return detail::abbott_identities_hold(
        elems, [](VertexSet a, VertexSet b) { return b - a; });
}

}  // namespace impalg
