#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "impalg/enumerate.hpp"
#include "impalg/synth.hpp"

#include "corpus.hpp"

using namespace impalg;

namespace {

Profile profile_of(const Hypergraph& h) {
    return compute_profile(ImplicationAlgebra::from_hypergraph(h));
}

Profile table(int m, const std::vector<int>& values) {
    Profile p(m);
    for (std::uint32_t s = 1; s < p.mask_limit(); ++s)
        p.set(IndexSet{s}, values.at(s - 1));
    return p;
}

}  // namespace

TEST_CASE("realize on one index") {
    const RealizedFamily f = realize(table(1, {3}));
    CHECK(f.ground_size == 3);
    REQUIRE(f.edges.size() == 1);
    CHECK(f.edges[0] == VertexSet::full(3));

    const RealizedFamily z = realize(table(1, {0}));
    CHECK(z.ground_size == 0);
    CHECK(z.edges == std::vector<VertexSet>{VertexSet{}});
}

TEST_CASE("realize splits on the lowest index") {
    // two edges of size 2 sharing one vertex
    const RealizedFamily f = realize(table(2, {2, 2, 1}));
    CHECK(f.ground_size == 3);
    CHECK(f.edges == std::vector<VertexSet>{VertexSet{0b011}, VertexSet{0b101}});

    // the triangle comes back as the triangle
    const RealizedFamily t = realize(profile_of(make_T()));
    CHECK(t.ground_size == 3);
    CHECK(t.edges == std::vector<VertexSet>{VertexSet{0b011}, VertexSet{0b101}, VertexSet{0b110}});
}

TEST_CASE("realize produces degenerate families when the profile forces them") {
    // constant 1: both edges are the same single vertex
    const RealizedFamily same = realize(table(2, {1, 1, 1}));
    CHECK(same.ground_size == 1);
    CHECK(same.edges == std::vector<VertexSet>{VertexSet{1}, VertexSet{1}});
    const DegeneracyReport rep1 = analyze_degeneracy(same);
    CHECK(rep1.coinciding == std::vector<std::vector<int>>{{0, 1}});
    CHECK(rep1.distinct_maximal == 1);

    // edge 0 sits inside edge 1
    const RealizedFamily nest = realize(table(2, {1, 2, 1}));
    CHECK(nest.edges == std::vector<VertexSet>{VertexSet{0b01}, VertexSet{0b11}});
    const DegeneracyReport rep2 = analyze_degeneracy(nest);
    CHECK(rep2.nested == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(rep2.distinct_maximal == 1);

    // all zero: every edge is empty
    const RealizedFamily zero = realize(table(3, {0, 0, 0, 0, 0, 0, 0}));
    CHECK(zero.ground_size == 0);
    const DegeneracyReport rep3 = analyze_degeneracy(zero);
    CHECK(rep3.empty_edges == std::vector<int>{0, 1, 2});
    CHECK(rep3.distinct_maximal == 0);
    CHECK(rep3.degenerate());
}

TEST_CASE("realize rejects a profile that fails the conditions") {
    try {
        realize(table(3, {1, 1, 1, 1, 1, 1, 0}));
        FAIL("expected conditions_fail");
    } catch (const Error& e) {
        CHECK(e.code() == errc::conditions_fail);
        CHECK(std::string(e.what()).find("p submodular") != std::string::npos);
    }
}

TEST_CASE("realize is deterministic") {
    const Profile p = profile_of(make_T());
    const RealizedFamily a = realize(p);
    const RealizedFamily b = realize(p);
    CHECK(a.ground_size == b.ground_size);
    CHECK(a.edges == b.edges);
}

TEST_CASE("realize round-trips every profile in the corpus") {
    for (const Hypergraph& h : enumerate_hypergraphs(4, 3, true)) {
        const Profile p = profile_of(h);
        const RealizedFamily f = realize(p);
        REQUIRE(f.edges.size() == h.edges().size());
        // checked independently of the verification inside realize
        for (std::uint32_t s = 1; s < p.mask_limit(); ++s)
            CHECK(detail::intersection_of(f.edges, IndexSet{s}).size() ==
                  intersection_size(h, IndexSet{s}));
        // a Sperner covering input has no spare vertices, so sizes agree
        CHECK(f.ground_size == h.vertex_count());
    }
}

TEST_CASE("realize_to_hypergraph") {
    const RealizationResult t = realize_to_hypergraph(profile_of(make_T()));
    CHECK(t.hypergraph.vertex_count() == 3);
    CHECK(t.hypergraph.vertex_names() == std::vector<std::string>{"v0", "v1", "v2"});
    CHECK(t.hypergraph.edges() ==
          std::vector<VertexSet>{VertexSet{0b011}, VertexSet{0b101}, VertexSet{0b110}});
    CHECK(!t.report.degenerate());

    // nested edge is dropped from the strict view but kept in the family
    const RealizationResult n = realize_to_hypergraph(table(2, {1, 2, 1}));
    CHECK(n.family.edges.size() == 2);
    CHECK(n.hypergraph.edges() == std::vector<VertexSet>{VertexSet{0b11}});
    CHECK(n.hypergraph.vertex_count() == 2);
    CHECK(n.report.nested == std::vector<std::pair<int, int>>{{0, 1}});

    // the all-empty family leaves an empty hypergraph
    const RealizationResult z = realize_to_hypergraph(table(2, {0, 0, 0}));
    CHECK(z.hypergraph.vertex_count() == 0);
    CHECK(z.hypergraph.edges().empty());

    // coinciding edges collapse to one
    const RealizationResult c = realize_to_hypergraph(table(2, {1, 1, 1}));
    CHECK(c.hypergraph.edges() == std::vector<VertexSet>{VertexSet{1}});
    CHECK(c.hypergraph.vertex_names() == std::vector<std::string>{"v0"});
}

TEST_CASE("the strict view is Sperner for every corpus profile") {
    for (const Hypergraph& h : enumerate_hypergraphs(4, 3, true)) {
        const RealizationResult r = realize_to_hypergraph(profile_of(h));
        CHECK(is_sperner(r.hypergraph));
    }
}
