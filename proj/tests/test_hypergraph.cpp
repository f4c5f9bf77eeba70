#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "impalg/enumerate.hpp"
#include "impalg/hypergraph.hpp"

#include "corpus.hpp"

using namespace impalg;

TEST_CASE("construction and accessors") {
    const Hypergraph t = make_T();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t.vertex_names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(t.edges()[0] == VertexSet{0b011});
    CHECK(t.edges()[1] == VertexSet{0b110});
    CHECK(t.edges()[2] == VertexSet{0b101});
    CHECK(t == make_T());
    CHECK(t != make_P());
}

TEST_CASE("validation errors") {
    CHECK(thrown_code([] { Hypergraph::create({"a", "b", "c"}, {{"a", "b"}}); }) ==
          errc::isolated_vertex);
    CHECK(thrown_code([] { Hypergraph::create({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) ==
          errc::duplicate_edge);
    CHECK(thrown_code([] { Hypergraph::create({"a"}, {{}}); }) == errc::empty_edge);
    CHECK(thrown_code([] { Hypergraph::create({"a"}, {{"z"}}); }) == errc::unknown_label);
    CHECK(thrown_code([] { Hypergraph::create({"a", "a"}, {{"a"}}); }) == errc::duplicate_label);
    CHECK(thrown_code([] { Hypergraph::create({"a", "b"}, {}); }) == errc::isolated_vertex);
    CHECK(thrown_code([] {
              Hypergraph::from_masks({"a", "b"}, {VertexSet{0b101}});
          }) == errc::bad_index_set);

    // the one valid edge-less hypergraph
    const Hypergraph empty = Hypergraph::create({}, {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    // isolated-vertex witness carries the vertex index
    try {
        Hypergraph::create({"a", "b", "c"}, {{"a", "b"}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.detail() == 2);
    }
}

TEST_CASE("is_sperner") {
    CHECK(is_sperner(make_T()));
    CHECK(is_sperner(make_S1()));
    CHECK(!is_sperner(Hypergraph::create({"a", "b"}, {{"a"}, {"a", "b"}})));
}

TEST_CASE("maximal_reduction") {
    CHECK(maximal_reduction(make_T()) == make_T());
    CHECK(maximal_reduction(Hypergraph::create({"a", "b"}, {{"a"}, {"a", "b"}})) == make_S1());

    const Hypergraph incomparable = Hypergraph::create({"a", "b", "c"}, {{"a"}, {"b", "c"}});
    CHECK(maximal_reduction(incomparable) == incomparable);

    const Hypergraph reduced =
        maximal_reduction(Hypergraph::create({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"a", "b", "c"}}));
    CHECK(is_sperner(reduced));
    CHECK(maximal_reduction(reduced) == reduced);
    CHECK(reduced.edge_count() == 1);
}

TEST_CASE("intersection and union sizes") {
    const Hypergraph t = make_T();
    CHECK(intersection_size(t, IndexSet{0b011}) == 1);
    CHECK(intersection_size(t, IndexSet{0b111}) == 0);
    CHECK(intersection_size(t, IndexSet{0b001}) == 2);
    CHECK(union_size(t, IndexSet{0b011}) == 3);
    CHECK(union_size(t, IndexSet{}) == 0);
    CHECK(union_size(make_M2(), IndexSet{0b11}) == 4);

    CHECK(thrown_code([&] { intersection_size(t, IndexSet{}); }) == errc::empty_index_set);
    CHECK(thrown_code([&] { intersection_size(t, IndexSet{0b1000}); }) == errc::bad_index_set);
    CHECK(thrown_code([&] { union_size(t, IndexSet{0b1000}); }) == errc::bad_index_set);
}

TEST_CASE("size monotonicity and submodularity over the named instances") {
    for (const Hypergraph& h : {make_T(), make_P(), make_M2(), make_S1()}) {
        const std::uint32_t limit = 1u << h.edge_count();
        for (std::uint32_t s2 = 1; s2 < limit; ++s2)
            for (std::uint32_t s1 = 1; s1 < limit; ++s1) {
                if ((s1 & ~s2) == 0 && s1 != 0) {
                    CHECK(intersection_size(h, IndexSet{s1}) >=
                          intersection_size(h, IndexSet{s2}));
                    CHECK(union_size(h, IndexSet{s1}) <= union_size(h, IndexSet{s2}));
                }
                CHECK(union_size(h, IndexSet{s1}) + union_size(h, IndexSet{s2}) >=
                      union_size(h, IndexSet{s1 | s2}) + union_size(h, IndexSet{s1 & s2}));
            }
    }
}

TEST_CASE("apply_vertex_permutation") {
    const Hypergraph t = make_T();
    const std::vector<int> swap_ac{2, 1, 0};
    const Hypergraph mapped = apply_vertex_permutation(t, swap_ac);
    CHECK(mapped.vertex_names() == std::vector<std::string>{"c", "b", "a"});
    CHECK(is_sperner(mapped));
    CHECK(apply_vertex_permutation(mapped, swap_ac) == t);
}

TEST_CASE("enumerate_hypergraphs small counts") {
    const auto one = enumerate_hypergraphs(1, 1, true);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Hypergraph::create({"a"}, {{"a"}}));

    const auto two = enumerate_hypergraphs(2, 1, true);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Hypergraph::create({"a"}, {{"a"}}));
    CHECK(two[1] == make_S1());

    // frozen regression counts, from this enumerator run exhaustively and
    // cross-checked by hand: see the matching hand-count test below
    CHECK(enumerate_hypergraphs(3, 2, true).size() == 6);
    CHECK(enumerate_hypergraphs(3, 2, true, /*dedup=*/false).size() == 10);

    CHECK(thrown_code([] { enumerate_hypergraphs(7, 5, true); }) == errc::bounds_too_large);
    CHECK(thrown_code([] { enumerate_hypergraphs(0, 1, true); }) == errc::bounds_too_large);
    CHECK(thrown_code([] { enumerate_hypergraphs(3, 5, true); }) == errc::bounds_too_large);
}

TEST_CASE("enumerate_hypergraphs properties") {
    int count = 0;
    enumerate_hypergraphs(3, 2, true, [&](const Hypergraph& h) {
        ++count;
        CHECK(is_sperner(h));
        CHECK(h.vertex_count() <= 3);
        CHECK(h.edge_count() <= 2);
        // edges arrive in increasing mask order
        for (int i = 0; i + 1 < h.edge_count(); ++i) CHECK(h.edges()[i] < h.edges()[i + 1]);
    });
    CHECK(count == 6);

    // without the Sperner filter, nested edge pairs join the stream
    const auto all = enumerate_hypergraphs(2, 2, false, /*dedup=*/false);
    CHECK(all.size() == 5);
    int non_sperner = 0;
    for (const Hypergraph& h : all) non_sperner += is_sperner(h) ? 0 : 1;
    CHECK(non_sperner == 2);

    // labeled n=3 k<=2 hand count: the covering antichain pairs over
    // {a,b,c} are {a}{bc}, {b}{ac}, {c}{ab}, {ab}{ac}, {ab}{bc}, {ac}{bc},
    // plus {abc} alone; with n=1 and n=2 that gives 10 labeled instances
    int labeled = 0;
    enumerate_hypergraphs(3, 2, true, [&](const Hypergraph&) { ++labeled; }, /*dedup=*/false);
    CHECK(labeled == 10);
}

TEST_CASE("enumeration dedup picks one representative per relabeling class") {
    const auto reps = enumerate_hypergraphs(3, 2, true);
    // {a}{bc} and {c}{ab} are the same hypergraph up to relabeling
    const Hypergraph variant = Hypergraph::create({"a", "b", "c"}, {{"c"}, {"a", "b"}});
    int hits = 0;
    for (const Hypergraph& rep : reps) {
        if (rep.vertex_count() != 3 || rep.edge_count() != 2) continue;
        std::vector<int> sizes{rep.edges()[0].size(), rep.edges()[1].size()};
        std::sort(sizes.begin(), sizes.end());
        if (sizes == std::vector<int>{1, 2}) ++hits;
    }
    CHECK(hits == 1);
    (void)variant;
}
