#include <catch2/catch_amalgamated.hpp>

#include "orthex/tree.hpp"

using namespace orthex;

namespace {

WeightedTree path(std::vector<long> weights) {
    WeightedTree t;
    t.weights = std::move(weights);
    for (std::size_t i = 0; i + 1 < t.weights.size(); ++i)
        t.edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    return t;
}

// All connected trees with the root plus up to `extra` finite vertices of
// weight at most `max_w`, optionally decorated with one infinite leaf on
// each vertex of weight > 1.
std::vector<WeightedTree> enumerate_trees(int max_extra, long max_w) {
    std::vector<WeightedTree> out;
    for (int nv = 2; nv <= max_extra + 1; ++nv) {
        std::vector<std::pair<int, int>> all_edges;
        for (int a = 0; a < nv; ++a)
            for (int b = a + 1; b < nv; ++b) all_edges.push_back({a, b});
        for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
            if (__builtin_popcount(mask) != nv - 1) continue;
            detail::UnionFind uf(nv);
            std::vector<std::pair<int, int>> edges;
            bool acyclic = true;
            for (std::size_t e = 0; e < all_edges.size(); ++e) {
                if (!(mask & (1u << e))) continue;
                auto [a, b] = all_edges[e];
                if (uf.find(a) == uf.find(b)) acyclic = false;
                uf.unite(a, b);
                edges.push_back(all_edges[e]);
            }
            if (!acyclic) continue;
            bool connected = true;
            for (int v = 0; v < nv; ++v)
                if (uf.find(v) != uf.find(0)) connected = false;
            if (!connected) continue;
            std::vector<long> w(nv, 1);
            std::function<void(int)> assign = [&](int v) {
                if (v == nv) {
                    // Optionally hang an infinite leaf on each heavy vertex.
                    std::vector<int> heavy;
                    for (int i = 0; i < nv; ++i)
                        if (w[i] > 1) heavy.push_back(i);
                    for (unsigned hm = 0; hm < (1u << heavy.size()); ++hm) {
                        WeightedTree t;
                        t.weights = w;
                        t.edges = edges;
                        for (std::size_t k = 0; k < heavy.size(); ++k) {
                            if (!(hm & (1u << k))) continue;
                            t.weights.push_back(WeightedTree::infinite);
                            t.edges.push_back(
                                {heavy[k], static_cast<int>(t.weights.size()) - 1});
                        }
                        out.push_back(std::move(t));
                    }
                    return;
                }
                for (long x = 1; x <= max_w; ++x) {
                    w[v] = x;
                    assign(v + 1);
                }
            };
            assign(1);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("tree validation") {
    CHECK_THROWS(validate(path({2, 1})));  // root weight must be 1
    WeightedTree bad_inf;
    bad_inf.weights = {1, WeightedTree::infinite};
    bad_inf.edges = {{0, 1}};
    CHECK_THROWS(validate(bad_inf));  // infinite edge from a weight-1 vertex
    WeightedTree ok = path({1, 2});
    ok.weights.push_back(WeightedTree::infinite);
    ok.edges.push_back({1, 2});
    CHECK_NOTHROW(validate(ok));
    WeightedTree cyc;
    cyc.weights = {1, 1, 1};
    cyc.edges = {{0, 1}, {1, 2}, {0, 2}};
    CHECK_THROWS(validate(cyc));
}

TEST_CASE("tree groups") {
    // Two vertices with d(1) = n: SL2 x Sp_2n on C^2 (x) C^2n.
    TreeGroup tg = tree_group(path({1, 3}));
    REQUIRE(tg.group.factors.size() == 2);
    CHECK(tg.group.factors[0] == GroupFactor{Pres::SP, 2});
    CHECK(tg.group.factors[1] == GroupFactor{Pres::SP, 6});
    REQUIRE(tg.module.summands.size() == 1);
    CHECK(module_dim(tg.group, tg.module) == 12);

    // Path with d(1) = 1: SL2 x SL2 on C^2 (x) C^2.
    TreeGroup small = tree_group(path({1, 1}));
    CHECK(module_dim(small.group, small.module) == 4);

    // The infinite edge contributes the 5-dimensional module of Sp4.
    WeightedTree with_inf = path({1, 2});
    with_inf.weights.push_back(WeightedTree::infinite);
    with_inf.edges.push_back({1, 2});
    TreeGroup ti = tree_group(with_inf);
    CHECK(module_dim(ti.group, ti.module) == 8 + 5);

    // Tree modules are always orthogonal.
    CHECK(is_orthogonal_module(tg.group, tg.module));
    CHECK(is_orthogonal_module(ti.group, ti.module));
}

TEST_CASE("yak predicate on pinned examples") {
    CHECK(yak_predicate(path({1, 2, 1})));
    // Star with heavy center and three neighbors violates (I).
    WeightedTree star;
    star.weights = {1, 2, 1, 1};
    star.edges = {{1, 0}, {1, 2}, {1, 3}};
    CHECK_FALSE(yak_predicate(star));
    // Adjacent heavy vertices of degree two violate (II).
    CHECK_FALSE(yak_predicate(path({1, 2, 2, 1})));
}

TEST_CASE("yak predicate agrees with the stabilizer projection") {
    CHECK(sgp_projection_full(path({1, 2, 1})));
    WeightedTree star;
    star.weights = {1, 2, 1, 1};
    star.edges = {{1, 0}, {1, 2}, {1, 3}};
    CHECK_FALSE(sgp_projection_full(star));
    CHECK_FALSE(sgp_projection_full(path({1, 2, 2, 1})));
    // The infinite-edge reading: 0 - 1 with d(1) = 2 plus an infinite leaf.
    WeightedTree with_inf = path({1, 2});
    with_inf.weights.push_back(WeightedTree::infinite);
    with_inf.edges.push_back({1, 2});
    CHECK(yak_predicate(with_inf));
    CHECK(sgp_projection_full(with_inf));
}

TEST_CASE("exhaustive small trees: predicate equals oracle") {
    auto trees = enumerate_trees(2, 2);
    REQUIRE(trees.size() > 5);
    for (const auto& t : trees) {
        if (!tree_group_indecomposable(t)) continue;
        INFO("tree with " << t.weights.size() << " vertices, " << t.edges.size() << " edges");
        CHECK(yak_predicate(t) == sgp_projection_full(t));
    }
}

TEST_CASE("t9 decision") {
    auto sl2 = GroupFactor{Pres::SL, 2};
    // Two disjoint two-vertex components, both passing the criterion.
    TripleSpec t;
    t.G = {{sl2, sl2, sl2, sl2}, 0};
    t.H = {{sl2, sl2, sl2}, 0};
    t.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}},
                     {EmbedKind::Id, {1}, {2}, {}},
                     {EmbedKind::Id, {2}, {3}, {}}};
    auto summand = [&](int a, int b) {
        ModuleSummand s;
        for (const auto& f : t.G.factors) s.slots.push_back(Weight(f.rank(), 0));
        s.slots[a] = {1};
        s.slots[b] = {1};
        return s;
    };
    t.V.summands = {summand(0, 2), summand(1, 3)};
    CHECK(t9_exceptional(t));

    // One shared component: the factorization degenerates to the diagonal.
    TripleSpec joined;
    joined.G = {{sl2, sl2, sl2}, 0};
    joined.H = {{sl2, sl2}, 0};
    joined.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}}, {EmbedKind::Id, {1}, {2}, {}}};
    auto summand3 = [&](int a, int b) {
        ModuleSummand s;
        for (const auto& f : joined.G.factors) s.slots.push_back(Weight(f.rank(), 0));
        s.slots[a] = {1};
        s.slots[b] = {1};
        return s;
    };
    joined.V.summands = {summand3(0, 2), summand3(1, 2)};
    CHECK_FALSE(t9_exceptional(joined));

    // H = G is trivial, never a nontrivial T9.
    TripleSpec trivial;
    trivial.G = {{sl2}, 0};
    trivial.H = {{sl2}, 0};
    trivial.emb.entries = {{EmbedKind::Id, {0}, {0}, {}}};
    ModuleSummand s;
    s.slots = {Weight{1}};
    s.mult = 2;
    trivial.V.summands = {s};
    CHECK_FALSE(t9_exceptional(trivial));
}

TEST_CASE("t9 agrees with the orbit oracle on both shapes") {
    auto sl2 = GroupFactor{Pres::SL, 2};
    TripleSpec t;
    t.G = {{sl2, sl2, sl2, sl2}, 0};
    t.H = {{sl2, sl2, sl2}, 0};
    t.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}},
                     {EmbedKind::Id, {1}, {2}, {}},
                     {EmbedKind::Id, {2}, {3}, {}}};
    auto summand = [&](int a, int b) {
        ModuleSummand s;
        for (const auto& f : t.G.factors) s.slots.push_back(Weight(f.rank(), 0));
        s.slots[a] = {1};
        s.slots[b] = {1};
        return s;
    };
    t.V.summands = {summand(0, 2), summand(1, 3)};
    OracleVerdict v = is_exceptional_oracle(t, 1);
    CHECK(v.exceptional == t9_exceptional(t));
    CHECK(v.codim == 2);

    TripleSpec joined;
    joined.G = {{sl2, sl2, sl2}, 0};
    joined.H = {{sl2, sl2}, 0};
    joined.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}}, {EmbedKind::Id, {1}, {2}, {}}};
    auto summand3 = [&](int a, int b) {
        ModuleSummand s;
        for (const auto& f : joined.G.factors) s.slots.push_back(Weight(f.rank(), 0));
        s.slots[a] = {1};
        s.slots[b] = {1};
        return s;
    };
    joined.V.summands = {summand3(0, 2), summand3(1, 2)};
    OracleVerdict w = is_exceptional_oracle(joined, 1);
    CHECK(w.exceptional == t9_exceptional(joined));
}
