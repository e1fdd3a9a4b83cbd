#pragma once

// Weighted rooted trees encoding symplectic linear groups: finite vertices
// carry Sp_{2d} factors, finite edges carry tensor modules, and edges to
// infinite leaves carry the symplectically traceless exterior square.  The
// degree conditions decide whether the generic stabilizer projects onto the
// root SL_2 in full, which in turn decides the T9 diagrams.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "orthex/group.hpp"
#include "orthex/oracle.hpp"

namespace orthex {

struct WeightedTree {
    static constexpr long infinite = -1;
    std::vector<long> weights;               // vertex 0 is the root
    std::vector<std::pair<int, int>> edges;  // forest edges

    int degree(int v) const {
        int d = 0;
        for (auto [a, b] : edges)
            if (a == v || b == v) ++d;
        return d;
    }
    bool is_infinite(int v) const { return weights[v] == infinite; }
};

inline void validate(const WeightedTree& t) {
    const int n = static_cast<int>(t.weights.size());
    if (n == 0) throw std::invalid_argument("tree has no vertices");
    if (t.weights[0] != 1) throw std::invalid_argument("root weight must be 1");
    for (long w : t.weights)
        if (w != WeightedTree::infinite && w < 1)
            throw std::invalid_argument("weights are positive integers or infinite");
    std::set<std::pair<int, int>> seen;
    detail::UnionFind uf(n);
    for (auto [a, b] : t.edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw std::invalid_argument("bad edge endpoints");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second)
            throw std::invalid_argument("duplicate edge");
        if (uf.find(a) == uf.find(b)) throw std::invalid_argument("edges must form a forest");
        uf.unite(a, b);
        if (t.is_infinite(a) && t.is_infinite(b))
            throw std::invalid_argument("edge between two infinite vertices");
    }
    for (int v = 0; v < n; ++v) {
        if (!t.is_infinite(v)) continue;
        if (t.degree(v) != 1) throw std::invalid_argument("infinite vertices must have degree 1");
        for (auto [a, b] : t.edges) {
            int other = a == v ? b : (b == v ? a : -1);
            if (other >= 0 && t.weights[other] <= 1)
                throw std::invalid_argument("an infinite edge needs weight > 1 at its finite end");
        }
    }
}

// The linear group of a tree: one Sp_{2d(i)} per finite vertex, a tensor
// module per finite edge, and the traceless exterior square per infinite
// edge.  Returns the group together with the map vertex -> factor index.
struct TreeGroup {
    GroupSpec group;
    ModuleSpec module;
    std::vector<int> factor_of_vertex;  // -1 for infinite vertices
};

inline TreeGroup tree_group(const WeightedTree& t) {
    validate(t);
    TreeGroup out;
    out.factor_of_vertex.assign(t.weights.size(), -1);
    for (std::size_t v = 0; v < t.weights.size(); ++v) {
        if (t.is_infinite(static_cast<int>(v))) continue;
        out.factor_of_vertex[v] = static_cast<int>(out.group.factors.size());
        out.group.factors.push_back({Pres::SP, static_cast<int>(2 * t.weights[v])});
    }
    for (auto [a, b] : t.edges) {
        ModuleSummand s;
        for (const auto& f : out.group.factors) s.slots.push_back(Weight(f.rank(), 0));
        if (t.is_infinite(a) || t.is_infinite(b)) {
            const int fin = t.is_infinite(a) ? b : a;
            const auto& f = out.group.factors[out.factor_of_vertex[fin]];
            s.slots[out.factor_of_vertex[fin]] = fundamental(f.type(), 2);
        } else {
            for (int v : {a, b}) {
                const auto& f = out.group.factors[out.factor_of_vertex[v]];
                s.slots[out.factor_of_vertex[v]] = f.defining_weight();
            }
        }
        out.module.summands.push_back(std::move(s));
    }
    if (out.module.summands.empty())
        throw std::invalid_argument("tree carries no module (no edges)");
    return out;
}

inline bool tree_group_indecomposable(const WeightedTree& t) {
    // The action graph follows the tree, so connectivity of the tree with no
    // isolated finite vertex is exactly indecomposability of the group.
    const int n = static_cast<int>(t.weights.size());
    detail::UnionFind uf(n);
    for (auto [a, b] : t.edges) uf.unite(a, b);
    for (int v = 0; v < n; ++v)
        if (uf.find(v) != uf.find(0)) return false;
    for (int v = 0; v < n; ++v)
        if (!t.is_infinite(v) && t.degree(v) == 0 && n > 1) return false;
    return n > 1;
}

// Conditions (I) and (II): vertices of weight > 1 have degree at most two,
// and every edge between two weight > 1 vertices (infinite counts) has an
// endpoint of degree one.
inline bool yak_predicate(const WeightedTree& t) {
    validate(t);
    if (!tree_group_indecomposable(t))
        throw std::invalid_argument("yak predicate needs an indecomposable tree group");
    for (std::size_t v = 0; v < t.weights.size(); ++v) {
        bool big = t.is_infinite(static_cast<int>(v)) || t.weights[v] > 1;
        if (big && t.degree(static_cast<int>(v)) > 2) return false;
    }
    for (auto [a, b] : t.edges) {
        bool big_a = t.is_infinite(a) || t.weights[a] > 1;
        bool big_b = t.is_infinite(b) || t.weights[b] > 1;
        if (big_a && big_b && t.degree(a) != 1 && t.degree(b) != 1) return false;
    }
    return true;
}

// Oracle cross-check: does the generic stabilizer project onto the full root
// SL_2?  Deterministic for a fixed seed; samples attaining the maximal orbit
// dimension are treated as generic.
inline bool sgp_projection_full(const WeightedTree& t, std::uint64_t seed = 1, int samples = 3,
                                const OracleLimits& lim = {}) {
    TreeGroup tg = tree_group(t);
    MatrixRep rep = rep_build(tg.group, tg.module, lim);
    std::mt19937_64 rng(seed);
    int best_orbit = -1;
    int best_proj = 0;
    for (int s = 0; s < samples; ++s) {
        RatVec v = random_vector(rep.space_dim, rng);
        int orbit = orbit_dim(rep, v);
        if (orbit <= best_orbit) continue;
        best_orbit = orbit;
        auto stab = stabilizer_coeffs(rep, v);
        const int root_factor = tg.factor_of_vertex[0];
        best_proj = projection_dim(stab, rep.factor_gens[root_factor].first,
                                   rep.factor_gens[root_factor].second);
    }
    return best_proj == 3;
}

// --- T9 decision ----------------------------------------------------------------

namespace detail {

// Reconstructs the weighted tree of one group component rooted at the given
// factor; summands must be phi_1 (x) phi_1 edges or phi_2 infinite edges of
// symplectic factors.
struct ComponentTree {
    WeightedTree tree;
    std::vector<int> vertex_of_factor;
};

inline std::optional<ComponentTree> component_tree(const GroupSpec& g, const ModuleSpec& v,
                                                   const std::vector<int>& factors, int root) {
    ComponentTree out;
    out.vertex_of_factor.assign(g.factors.size(), -1);
    auto add_vertex = [&](int fi) {
        const GroupFactor& f = g.factors[fi];
        bool symplectic_like = f.pres == Pres::SP || (f.pres == Pres::SL && f.n == 2);
        if (!symplectic_like) return -1;
        out.vertex_of_factor[fi] = static_cast<int>(out.tree.weights.size());
        out.tree.weights.push_back(f.n / 2);
        return out.vertex_of_factor[fi];
    };
    if (add_vertex(root) < 0) return std::nullopt;
    for (int fi : factors)
        if (fi != root && add_vertex(fi) < 0) return std::nullopt;
    std::set<int> in_component(factors.begin(), factors.end());
    in_component.insert(root);
    for (const auto& s : v.summands) {
        std::vector<int> acting;
        for (std::size_t fi = 0; fi < g.factors.size(); ++fi)
            if (s.acts(fi)) acting.push_back(static_cast<int>(fi));
        if (acting.empty()) continue;
        if (!in_component.count(acting[0])) continue;
        if (s.mult != 1) return std::nullopt;
        if (acting.size() == 2) {
            for (int fi : acting) {
                if (s.slots[fi] != g.factors[fi].defining_weight()) return std::nullopt;
            }
            out.tree.edges.push_back(
                {out.vertex_of_factor[acting[0]], out.vertex_of_factor[acting[1]]});
        } else if (acting.size() == 1) {
            const GroupFactor& f = g.factors[acting[0]];
            if (f.pres != Pres::SP || f.n < 4) return std::nullopt;
            if (s.slots[acting[0]] != fundamental(f.type(), 2)) return std::nullopt;
            out.tree.weights.push_back(WeightedTree::infinite);
            out.tree.edges.push_back({out.vertex_of_factor[acting[0]],
                                      static_cast<int>(out.tree.weights.size()) - 1});
        } else {
            return std::nullopt;
        }
    }
    return out;
}

}  // namespace detail

// Decides a T9-shaped triple: H contains a diagonal SL_2 over two G-factors
// whose group components are symplectic tree groups.  Exceptional exactly
// when the two factors lie in different components and at least one of them
// satisfies the degree conditions.
inline bool t9_exceptional(const TripleSpec& t) {
    validate(t);
    const EmbedEntry* diag = nullptr;
    for (const auto& e : t.emb.entries) {
        if (e.kind != EmbedKind::Diag) continue;
        if (diag) throw std::invalid_argument("t9: several diagonal pairs");
        diag = &e;
    }
    if (!diag) return false;  // includes the trivial H = G case
    const GroupFactor& hf = t.H.factors[diag->h[0]];
    if (hf.type() != SimpleType{Family::A, 1} || hf.n != 2)
        throw std::invalid_argument("t9: the diagonal factor must be an SL2");

    // Components of the group action graph, without the H-side edges.
    detail::UnionFind uf(t.G.factors.size());
    for (const auto& s : t.V.summands) {
        int first = -1;
        for (std::size_t fi = 0; fi < t.G.factors.size(); ++fi) {
            if (!s.acts(fi)) continue;
            if (first < 0)
                first = static_cast<int>(fi);
            else
                uf.unite(first, fi);
        }
    }
    const int g1 = diag->g[0], g2 = diag->g[1];
    if (uf.find(g1) == uf.find(g2)) return false;

    for (int root : {g1, g2}) {
        std::vector<int> members;
        for (std::size_t fi = 0; fi < t.G.factors.size(); ++fi)
            if (uf.find(fi) == uf.find(root)) members.push_back(static_cast<int>(fi));
        auto ct = detail::component_tree(t.G, t.V, members, root);
        if (!ct) throw std::invalid_argument("t9: component groups not of the Sp-tree shape");
        try {
            if (yak_predicate(ct->tree)) return true;
        } catch (const std::invalid_argument&) {
            // A decomposable component cannot certify the factorization.
        }
    }
    return false;
}

}  // namespace orthex
