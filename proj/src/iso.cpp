#include "impalg/iso.hpp"

#include <algorithm>

namespace impalg {

std::optional<IsoWitness> IsoWitness::verify(const Profile& p1, const Profile& p2,
                                             std::span<const int> image) {
    const int m = p1.index_count();
    if (p2.index_count() != m || static_cast<int>(image.size()) != m) return std::nullopt;

    IndexSet hit;
    for (int i = 0; i < m; ++i) {
        if (image[i] < 0 || image[i] >= m || hit.contains(image[i])) return std::nullopt;
        hit = hit.with(image[i]);
    }
    for (std::uint32_t x = 1; x < p1.mask_limit(); ++x) {
        IndexSet mapped;
        for (int i : IndexSet{x}) mapped = mapped.with(image[i]);
        if (p1.at(IndexSet{x}) != p2.at(mapped)) return std::nullopt;
    }

    IsoWitness w;
    for (int i = 0; i < m; ++i) w.mapping_.emplace_back(i, image[i]);
    return w;
}

namespace {

struct IndexFeatures {
    std::vector<int> singleton;              // p({i})
    std::vector<std::vector<int>> pairvec;   // sorted p({i,j}) over j != i
};

IndexFeatures features_of(const Profile& p) {
    const int m = p.index_count();
    IndexFeatures f;
    f.singleton.resize(m);
    f.pairvec.resize(m);
    for (int i = 0; i < m; ++i) {
        f.singleton[i] = p.at(IndexSet::singleton(i));
        for (int j = 0; j < m; ++j)
            if (j != i) f.pairvec[i].push_back(p.at(IndexSet::singleton(i).with(j)));
        std::sort(f.pairvec[i].begin(), f.pairvec[i].end());
    }
    return f;
}

struct IsoSearch {
    const Profile& p1;
    const Profile& p2;
    const IndexFeatures f1;
    const IndexFeatures f2;
    int m;
    std::vector<int> order;   // I1 indices, most-constrained first
    std::vector<int> image;   // φ, -1 for unassigned
    std::vector<bool> used;   // of I2 indices

    bool extend(int depth) {
        if (depth == m) {
            // Leaves re-verify the whole profile equality; the pruning
            // above is only ever an optimization.
            return IsoWitness::verify(p1, p2, image).has_value();
        }
        const int i = order[depth];
        for (int j = 0; j < m; ++j) {
            if (used[j]) continue;
            if (f2.singleton[j] != f1.singleton[i]) continue;
            if (f2.pairvec[j] != f1.pairvec[i]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int i2 = order[d];
                ok = p1.at(IndexSet::singleton(i).with(i2)) ==
                     p2.at(IndexSet::singleton(j).with(image[i2]));
            }
            if (!ok) continue;
            image[i] = j;
            used[j] = true;
            if (extend(depth + 1)) return true;
            image[i] = -1;
            used[j] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<IsoWitness> algebra_iso(const ImplicationAlgebra& i1,
                                      const ImplicationAlgebra& i2) {
    if (i1.min_edges().size() != i2.min_edges().size()) return std::nullopt;
    const Profile p1 = compute_profile(i1);
    const Profile p2 = compute_profile(i2);
    const int m = p1.index_count();

    IsoSearch search{p1, p2, features_of(p1), features_of(p2), m, {}, {}, {}};
    search.order.resize(m);
    for (int i = 0; i < m; ++i) search.order[i] = i;
    std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        if (search.f1.singleton[a] != search.f1.singleton[b])
            return search.f1.singleton[a] > search.f1.singleton[b];
        if (search.f1.pairvec[a] != search.f1.pairvec[b])
            return search.f1.pairvec[a] > search.f1.pairvec[b];
        return a < b;
    });
    search.image.assign(m, -1);
    search.used.assign(m, false);

    if (!search.extend(0)) return std::nullopt;
    return IsoWitness::verify(p1, p2, search.image);
}

bool hypergraph_iso(const Hypergraph& h1, const Hypergraph& h2) {
    // The algebra side only sees vertices inside edges; with no isolated
    // vertices allowed, equal vertex counts is an exact necessary check.
    if (h1.vertex_count() != h2.vertex_count()) return false;
    if (h1.edge_count() == 0 || h2.edge_count() == 0)
        return h1.edge_count() == h2.edge_count();
    return algebra_iso(ImplicationAlgebra::from_hypergraph(h1),
                       ImplicationAlgebra::from_hypergraph(h2))
        .has_value();
}

namespace {

struct PosetSearch {
    const std::vector<VertexSet>& e1;
    const std::vector<VertexSet>& e2;
    std::vector<int> image;  // e1 position -> e2 position, -1 unassigned
    std::vector<bool> used;

    bool extend(size_t depth) {
        if (depth == e1.size()) return true;
        const VertexSet x = e1[depth];
        for (size_t j = 0; j < e2.size(); ++j) {
            if (used[j]) continue;
            if (e2[j].size() != x.size()) continue;  // corank is an order invariant
            bool ok = true;
            for (size_t d = 0; d < depth && ok; ++d) {
                const bool below1 = e1[d].is_subset_of(x);
                const bool above1 = x.is_subset_of(e1[d]);
                const bool below2 = e2[image[d]].is_subset_of(e2[j]);
                const bool above2 = e2[j].is_subset_of(e2[image[d]]);
                ok = below1 == below2 && above1 == above2;
            }
            if (!ok) continue;
            image[depth] = static_cast<int>(j);
            used[j] = true;
            if (extend(depth + 1)) return true;
            image[depth] = -1;
            used[j] = false;
        }
        return false;
    }
};

}  // namespace

bool poset_iso_oracle(const ImplicationAlgebra& i1, const ImplicationAlgebra& i2) {
    const std::vector<VertexSet> e1 = elements(i1);
    const std::vector<VertexSet> e2 = elements(i2);
    if (e1.size() > 12 || e2.size() > 12)
        throw Error(errc::too_large, "the poset oracle refuses more than 12 elements");
    if (e1.size() != e2.size()) return false;

    // Both orders are reverse inclusion, so preserving inclusion both
    // ways is exactly preserving the order both ways.
    PosetSearch search{e1, e2, std::vector<int>(e1.size(), -1),
                       std::vector<bool>(e1.size(), false)};
    return search.extend(0);
}

}  // namespace impalg
