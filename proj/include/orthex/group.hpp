#pragma once

// Data model for linear groups (products of simple factors plus a central
// torus), modules over them, subgroup embeddings, and the structural
// predicates driving classification: orthogonality of a module, component
// decomposition, local triviality, strong faithfulness, split kinds.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthex/lie.hpp"

namespace orthex {

// Classical presentation of a simple factor.  The presentation fixes how
// phi-indices are read and which matrix realization the oracle builds:
// so(3) is the algebra A1 presented on C^3, sp(2) = sl(2) on C^2.
enum class Pres { SL, SO, SP, G2 };

struct GroupFactor {
    Pres pres = Pres::SL;
    int n = 2;  // size of the defining space

    bool operator==(const GroupFactor&) const = default;
    auto operator<=>(const GroupFactor&) const = default;

    SimpleType type() const {
        switch (pres) {
            case Pres::SL: return {Family::A, n - 1};
            case Pres::SO:
                if (n == 3) return {Family::A, 1};
                if (n % 2 == 1) return {Family::B, (n - 1) / 2};
                return {Family::D, n / 2};
            case Pres::SP: return n == 2 ? SimpleType{Family::A, 1} : SimpleType{Family::C, n / 2};
            case Pres::G2: return {Family::G, 2};
        }
        return {Family::A, 1};
    }

    int rank() const { return type().rank; }
    int dim() const { return algebra_dim(type()); }

    // Weight of the defining module C^n.
    Weight defining_weight() const {
        if (pres == Pres::SO && n == 3) return {2};
        return fundamental(type(), 1);
    }

    // phi_k in the factor's own numbering.  For so(2r+1) and so(2r) this is
    // the standard ordering; so(3) maps phi_1 to the 3-dimensional A1 weight.
    Weight phi(int k) const {
        if (pres == Pres::SO && n == 3) {
            if (k != 1) throw std::invalid_argument("so(3) has only phi(1)");
            return {2};
        }
        return fundamental(type(), k);
    }
};

inline bool valid(const GroupFactor& f) {
    switch (f.pres) {
        case Pres::SL: return f.n >= 2;
        case Pres::SO: return f.n >= 3 && f.n != 4;
        case Pres::SP: return f.n >= 2 && f.n % 2 == 0;
        case Pres::G2: return f.n == 7;
    }
    return false;
}

inline std::string to_string(const GroupFactor& f) {
    switch (f.pres) {
        case Pres::SL: return "sl(" + std::to_string(f.n) + ")";
        case Pres::SO: return "so(" + std::to_string(f.n) + ")";
        case Pres::SP: return "sp(" + std::to_string(f.n) + ")";
        case Pres::G2: return "g(2)";
    }
    return "?";
}

struct GroupSpec {
    std::vector<GroupFactor> factors;
    int torus_rank = 0;

    bool operator==(const GroupSpec&) const = default;

    int dim() const {
        int d = torus_rank;
        for (const auto& f : factors) d += f.dim();
        return d;
    }
    bool is_trivial() const { return factors.empty() && torus_rank == 0; }
    bool is_semisimple() const { return torus_rank == 0; }
};

// One isotypic piece of a module: a tensor product across the factors
// (zero weight = that factor acts trivially), twisted by torus charges,
// with an explicit multiplicity.
struct ModuleSummand {
    std::vector<Weight> slots;  // one per group factor
    std::vector<long> charges;  // one per torus coordinate
    long mult = 1;

    bool operator==(const ModuleSummand&) const = default;
    auto operator<=>(const ModuleSummand&) const = default;

    bool acts(std::size_t factor) const { return !is_trivial_weight(slots[factor]); }
    bool is_trivial() const {
        return std::all_of(slots.begin(), slots.end(), is_trivial_weight) &&
               std::all_of(charges.begin(), charges.end(), [](long c) { return c == 0; });
    }
};

struct ModuleSpec {
    std::vector<ModuleSummand> summands;

    bool operator==(const ModuleSpec&) const = default;
};

inline void validate_module(const GroupSpec& g, const ModuleSpec& v) {
    for (const auto& s : v.summands) {
        if (s.slots.size() != g.factors.size())
            throw std::invalid_argument("module summand has wrong number of factor slots");
        if (static_cast<int>(s.charges.size()) != g.torus_rank)
            throw std::invalid_argument("module summand has wrong number of torus charges");
        if (s.mult < 1) throw std::invalid_argument("summand multiplicity must be positive");
        for (std::size_t i = 0; i < s.slots.size(); ++i) {
            if (static_cast<int>(s.slots[i].size()) != g.factors[i].rank())
                throw std::invalid_argument("slot weight length does not match factor rank");
            Irrep r{g.factors[i].type(), s.slots[i]};
            if (!valid(r)) throw std::invalid_argument("invalid slot weight");
        }
    }
}

inline Big summand_dim(const GroupSpec& g, const ModuleSummand& s) {
    Big d = 1;
    for (std::size_t i = 0; i < s.slots.size(); ++i)
        if (s.acts(i)) d *= dim_irrep({g.factors[i].type(), s.slots[i]});
    return d;
}

inline Big module_dim(const GroupSpec& g, const ModuleSpec& v) {
    Big d = 0;
    for (const auto& s : v.summands) d += summand_dim(g, s) * s.mult;
    return d;
}

// Slotwise dual with negated torus charges.
inline ModuleSummand dual_summand(const GroupSpec& g, const ModuleSummand& s) {
    ModuleSummand d = s;
    for (std::size_t i = 0; i < s.slots.size(); ++i)
        if (s.acts(i)) d.slots[i] = dual_weight({g.factors[i].type(), s.slots[i]}).weight;
    for (auto& c : d.charges) c = -c;
    return d;
}

// Symmetry type of the invariant form on one summand: any complex slot or a
// nonzero charge makes it complex; otherwise symplectic slots multiply up.
inline FormType summand_form_type(const GroupSpec& g, const ModuleSummand& s) {
    if (std::any_of(s.charges.begin(), s.charges.end(), [](long c) { return c != 0; }))
        return FormType::complex;
    int symplectic_slots = 0;
    for (std::size_t i = 0; i < s.slots.size(); ++i) {
        if (!s.acts(i)) continue;
        FormType f = form_type({g.factors[i].type(), s.slots[i]});
        if (f == FormType::complex) return FormType::complex;
        if (f == FormType::symplectic) ++symplectic_slots;
    }
    return symplectic_slots % 2 == 1 ? FormType::symplectic : FormType::orthogonal;
}

// Does v carry a nondegenerate invariant symmetric bilinear form?  The
// summand multiset must be closed under duals and self-dual symplectic
// summands must occur with even multiplicity.
inline bool is_orthogonal_module(const GroupSpec& g, const ModuleSpec& v) {
    validate_module(g, v);
    std::map<std::pair<std::vector<Weight>, std::vector<long>>, long> mult;
    for (const auto& s : v.summands) mult[{s.slots, s.charges}] += s.mult;
    for (const auto& [key, m] : mult) {
        ModuleSummand s{key.first, key.second, 1};
        ModuleSummand d = dual_summand(g, s);
        if (d.slots == s.slots && d.charges == s.charges) {
            if (summand_form_type(g, s) == FormType::symplectic && m % 2 != 0) return false;
        } else {
            auto it = mult.find({d.slots, d.charges});
            if (it == mult.end() || it->second != m) return false;
        }
    }
    return true;
}

// --- Embeddings -----------------------------------------------------------

enum class EmbedKind {
    Id,           // isomorphism onto one G-factor
    DefiningSub,  // proper subalgebra on the same defining space (sp_2n in sl_2n, G2 in so_7)
    VectorPad,    // defining module plus trivial padding (so_m in so_n, sl_m in sl_n)
    Spin,         // spin or half-spin fills the target's defining module
    SplitSum,     // sl_n in so_2n via phi_1 + phi_{n-1}
    TensorPair,   // several H-factors tensor onto one G-factor's defining module
    Lambda2,      // sl_m in sl_{m(m-1)/2} via the exterior square
    Diag,         // one H-factor onto two isomorphic G-factors diagonally
};

struct EmbedEntry {
    EmbedKind kind = EmbedKind::Id;
    std::vector<int> h;        // H-factor indices (two or more only for TensorPair)
    std::vector<int> g;        // G-factor indices (two only for Diag)
    std::vector<bool> dual;    // per h-slot: slot acts through the dual defining module

    bool operator==(const EmbedEntry&) const = default;
};

// All-false dual flags and an absent vector mean the same thing; keep the
// canonical empty form so specs compare equal.
inline void normalize_dual(EmbedEntry& e) {
    bool any = false;
    for (bool d : e.dual) any = any || d;
    if (!any) e.dual.clear();
}

struct EmbeddingSpec {
    std::vector<EmbedEntry> entries;
    // Column k is the image in Z^{G.torus_rank} of the k-th H-torus coordinate.
    std::vector<std::vector<long>> torus_map;

    bool operator==(const EmbeddingSpec&) const = default;
};

struct TripleSpec {
    GroupSpec H;
    GroupSpec G;
    EmbeddingSpec emb;
    ModuleSpec V;

    bool operator==(const TripleSpec&) const = default;
};

inline void validate_embedding(const TripleSpec& t) {
    std::vector<int> h_seen(t.H.factors.size(), 0), g_seen(t.G.factors.size(), 0);
    for (const auto& e : t.emb.entries) {
        if (e.h.empty() || e.g.empty()) throw std::invalid_argument("empty embedding entry");
        if (!e.dual.empty() && e.dual.size() != e.h.size())
            throw std::invalid_argument("dual flags must match h slots");
        for (int hi : e.h) {
            if (hi < 0 || hi >= static_cast<int>(t.H.factors.size()))
                throw std::invalid_argument("embedding references unknown H factor");
            ++h_seen[hi];
        }
        for (int gi : e.g) {
            if (gi < 0 || gi >= static_cast<int>(t.G.factors.size()))
                throw std::invalid_argument("embedding references unknown G factor");
            ++g_seen[gi];
        }
        const GroupFactor& hf = t.H.factors[e.h[0]];
        switch (e.kind) {
            case EmbedKind::Id:
                if (e.h.size() != 1 || e.g.size() != 1) throw std::invalid_argument("id entry shape");
                if (hf.type() != t.G.factors[e.g[0]].type())
                    throw std::invalid_argument("id embedding between non-isomorphic factors");
                break;
            case EmbedKind::Diag: {
                if (e.h.size() != 1 || e.g.size() != 2) throw std::invalid_argument("diag entry shape");
                const auto& a = t.G.factors[e.g[0]];
                const auto& b = t.G.factors[e.g[1]];
                if (a != b || a.type() != hf.type())
                    throw std::invalid_argument("diagonal pair must target two isomorphic factors");
                break;
            }
            case EmbedKind::DefiningSub: {
                if (e.h.size() != 1 || e.g.size() != 1) throw std::invalid_argument("entry shape");
                const auto& gf = t.G.factors[e.g[0]];
                if (hf.n != gf.n) throw std::invalid_argument("defining-sub needs equal spaces");
                bool ok = (hf.pres == Pres::SP && gf.pres == Pres::SL) ||
                          (hf.pres == Pres::SO && gf.pres == Pres::SL) ||
                          (hf.pres == Pres::G2 && gf.pres == Pres::SO);
                if (!ok) throw std::invalid_argument("defining-sub presentations");
                break;
            }
            case EmbedKind::VectorPad: {
                if (e.h.size() != 1 || e.g.size() != 1) throw std::invalid_argument("entry shape");
                const auto& gf = t.G.factors[e.g[0]];
                if (hf.n >= gf.n) throw std::invalid_argument("vector embedding needs smaller factor");
                bool so_like = (hf.pres == Pres::SO || hf.pres == Pres::G2) && gf.pres == Pres::SO;
                bool sl_like = hf.pres == Pres::SL && gf.pres == Pres::SL;
                if (!so_like && !sl_like) throw std::invalid_argument("vector embedding presentations");
                break;
            }
            case EmbedKind::Spin: {
                if (e.h.size() != 1 || e.g.size() != 1) throw std::invalid_argument("entry shape");
                const auto& gf = t.G.factors[e.g[0]];
                if (hf.pres != Pres::SO) throw std::invalid_argument("spin embedding source");
                SimpleType ht = hf.type();
                Big sd = dim_irrep({ht, fundamental(ht, ht.rank)});
                if (sd != gf.n) throw std::invalid_argument("spin dimension does not fill target");
                break;
            }
            case EmbedKind::SplitSum: {
                if (e.h.size() != 1 || e.g.size() != 1) throw std::invalid_argument("entry shape");
                const auto& gf = t.G.factors[e.g[0]];
                if (hf.pres != Pres::SL || gf.pres != Pres::SO || gf.n != 2 * hf.n)
                    throw std::invalid_argument("split embedding needs sl(n) in so(2n)");
                break;
            }
            case EmbedKind::TensorPair: {
                if (e.h.size() < 2 || e.g.size() != 1) throw std::invalid_argument("entry shape");
                long prod = 1;
                for (int hi : e.h) prod *= t.H.factors[hi].n;
                if (prod != t.G.factors[e.g[0]].n)
                    throw std::invalid_argument("tensor embedding dimension mismatch");
                break;
            }
            case EmbedKind::Lambda2: {
                if (e.h.size() != 1 || e.g.size() != 1) throw std::invalid_argument("entry shape");
                const auto& gf = t.G.factors[e.g[0]];
                if (hf.pres != Pres::SL || gf.pres != Pres::SL ||
                    gf.n != hf.n * (hf.n - 1) / 2)
                    throw std::invalid_argument("lambda2 embedding dimension mismatch");
                break;
            }
        }
    }
    for (std::size_t i = 0; i < h_seen.size(); ++i)
        if (h_seen[i] != 1) throw std::invalid_argument("every H factor needs exactly one entry");
    for (std::size_t i = 0; i < g_seen.size(); ++i)
        if (g_seen[i] > 1) throw std::invalid_argument("G factor hit by several entries");
    if (static_cast<int>(t.emb.torus_map.size()) != t.H.torus_rank)
        throw std::invalid_argument("torus map has wrong number of columns");
    for (const auto& col : t.emb.torus_map)
        if (static_cast<int>(col.size()) != t.G.torus_rank)
            throw std::invalid_argument("torus map column has wrong length");
}

inline void validate(const TripleSpec& t) {
    for (const auto& f : t.H.factors)
        if (!valid(f)) throw std::invalid_argument("invalid H factor");
    for (const auto& f : t.G.factors)
        if (!valid(f)) throw std::invalid_argument("invalid G factor");
    validate_module(t.G, t.V);
    if (t.V.summands.empty()) throw std::invalid_argument("module must be non-empty");
    validate_embedding(t);
}

// Entry covering a given G factor, if any.
inline const EmbedEntry* entry_for_g(const TripleSpec& t, int g_idx) {
    for (const auto& e : t.emb.entries)
        for (int gi : e.g)
            if (gi == g_idx) return &e;
    return nullptr;
}

// True when the H image and the G image coincide on this summand: every
// acting G-factor is matched isomorphically and no diagonal pair has both
// of its targets acting here.  Torus actions are compared through the map.
inline bool summand_is_trivial_pair(const TripleSpec& t, const ModuleSummand& s) {
    for (std::size_t gi = 0; gi < t.G.factors.size(); ++gi) {
        if (!s.acts(gi)) continue;
        const EmbedEntry* e = entry_for_g(t, static_cast<int>(gi));
        if (!e) return false;
        if (e->kind == EmbedKind::Id) continue;
        if (e->kind == EmbedKind::Diag) {
            // Fine as long as the partner copy is inactive on this summand.
            int other = e->g[0] == static_cast<int>(gi) ? e->g[1] : e->g[0];
            if (s.acts(other)) return false;
            continue;
        }
        return false;
    }
    for (std::size_t c = 0; c < s.charges.size(); ++c) {
        if (s.charges[c] == 0) continue;
        // A torus coordinate acting here must be reachable from H's torus.
        bool covered = false;
        for (const auto& col : t.emb.torus_map)
            if (col[c] != 0) covered = true;
        if (!covered) return false;
    }
    return true;
}

// Every summand individually sees the same H- and G-image.
inline bool all_summands_trivial(const TripleSpec& t) {
    return std::all_of(t.V.summands.begin(), t.V.summands.end(),
                       [&](const ModuleSummand& s) { return summand_is_trivial_pair(t, s); });
}

// True when H and G have the same image in GL(V).  Beyond the summand-wise
// check, a diagonal pair whose two targets both act somewhere identifies two
// otherwise independent copies, so the global images differ.
inline bool is_trivial_triple(const TripleSpec& t) {
    if (!all_summands_trivial(t)) return false;
    for (const auto& e : t.emb.entries) {
        if (e.kind != EmbedKind::Diag) continue;
        auto acts_somewhere = [&](int g_idx) {
            for (const auto& s : t.V.summands)
                if (s.acts(g_idx)) return true;
            return false;
        };
        if (acts_somewhere(e.g[0]) && acts_somewhere(e.g[1])) return false;
    }
    return true;
}

// --- Component decomposition ----------------------------------------------

namespace detail {
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p_[x] != x) x = p_[x] = p_[p_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { p_[find(a)] = find(b); }

private:
    std::vector<std::size_t> p_;
};
}  // namespace detail

// Splits t into the connected components of the action graph (factor-summand
// edges plus embedding edges plus torus incidences).  The direct sum of the
// returned triples reconstructs t up to reordering.
inline std::vector<TripleSpec> decompose_components(const TripleSpec& t) {
    validate(t);
    const std::size_t nG = t.G.factors.size();
    const std::size_t nTg = static_cast<std::size_t>(t.G.torus_rank);
    const std::size_t nS = t.V.summands.size();
    const std::size_t nH = t.H.factors.size();
    const std::size_t nTh = static_cast<std::size_t>(t.H.torus_rank);
    // node layout: [G factors][G torus][summands][H factors][H torus]
    auto g_node = [&](std::size_t i) { return i; };
    auto tg_node = [&](std::size_t i) { return nG + i; };
    auto s_node = [&](std::size_t i) { return nG + nTg + i; };
    auto h_node = [&](std::size_t i) { return nG + nTg + nS + i; };
    auto th_node = [&](std::size_t i) { return nG + nTg + nS + nH + i; };
    detail::UnionFind uf(nG + nTg + nS + nH + nTh);

    for (std::size_t si = 0; si < nS; ++si) {
        const auto& s = t.V.summands[si];
        for (std::size_t gi = 0; gi < nG; ++gi)
            if (s.acts(gi)) uf.unite(s_node(si), g_node(gi));
        for (std::size_t c = 0; c < nTg; ++c)
            if (s.charges[c] != 0) uf.unite(s_node(si), tg_node(c));
    }
    for (std::size_t ei = 0; ei < t.emb.entries.size(); ++ei) {
        const auto& e = t.emb.entries[ei];
        for (std::size_t k = 1; k < e.h.size(); ++k) uf.unite(h_node(e.h[0]), h_node(e.h[k]));
        for (int gi : e.g) uf.unite(h_node(e.h[0]), g_node(gi));
    }
    for (std::size_t k = 0; k < nTh; ++k)
        for (std::size_t c = 0; c < nTg; ++c)
            if (t.emb.torus_map[k][c] != 0) uf.unite(th_node(k), tg_node(c));

    // Group summands by root; components without summands are dropped (they
    // act on nothing and cannot affect invariants).
    std::map<std::size_t, std::size_t> comp_of_root;
    std::vector<std::size_t> roots;
    for (std::size_t si = 0; si < nS; ++si) {
        std::size_t r = uf.find(s_node(si));
        if (!comp_of_root.count(r)) {
            comp_of_root[r] = roots.size();
            roots.push_back(r);
        }
    }

    std::vector<TripleSpec> out(roots.size());
    for (std::size_t ci = 0; ci < roots.size(); ++ci) {
        std::size_t root = roots[ci];
        TripleSpec c;
        std::vector<int> gmap(nG, -1), tgmap(nTg, -1), hmap(nH, -1), thmap(nTh, -1);
        for (std::size_t gi = 0; gi < nG; ++gi)
            if (uf.find(g_node(gi)) == root) {
                gmap[gi] = static_cast<int>(c.G.factors.size());
                c.G.factors.push_back(t.G.factors[gi]);
            }
        for (std::size_t k = 0; k < nTg; ++k)
            if (uf.find(tg_node(k)) == root) {
                tgmap[k] = c.G.torus_rank++;
            }
        for (std::size_t hi = 0; hi < nH; ++hi)
            if (uf.find(h_node(hi)) == root) {
                hmap[hi] = static_cast<int>(c.H.factors.size());
                c.H.factors.push_back(t.H.factors[hi]);
            }
        for (std::size_t k = 0; k < nTh; ++k)
            if (uf.find(th_node(k)) == root) {
                thmap[k] = c.H.torus_rank++;
            }
        for (const auto& e : t.emb.entries) {
            if (uf.find(h_node(e.h[0])) != root) continue;
            EmbedEntry ne = e;
            for (auto& hi : ne.h) hi = hmap[hi];
            for (auto& gi : ne.g) gi = gmap[gi];
            c.emb.entries.push_back(ne);
        }
        for (std::size_t k = 0; k < nTh; ++k) {
            if (thmap[k] < 0) continue;
            std::vector<long> col(c.G.torus_rank, 0);
            for (std::size_t j = 0; j < nTg; ++j)
                if (tgmap[j] >= 0) col[tgmap[j]] = t.emb.torus_map[k][j];
            c.emb.torus_map.push_back(std::move(col));
        }
        for (std::size_t si = 0; si < nS; ++si) {
            if (uf.find(s_node(si)) != root) continue;
            const auto& s = t.V.summands[si];
            ModuleSummand ns;
            ns.mult = s.mult;
            for (std::size_t gi = 0; gi < nG; ++gi)
                if (gmap[gi] >= 0) ns.slots.push_back(s.slots[gi]);
            for (std::size_t k = 0; k < nTg; ++k)
                if (tgmap[k] >= 0) ns.charges.push_back(s.charges[k]);
            c.V.summands.push_back(std::move(ns));
        }
        out[ci] = std::move(c);
    }
    return out;
}

// --- Locally trivial / strongly faithful ----------------------------------

inline bool has_diagonal_entry(const TripleSpec& t) {
    return std::any_of(t.emb.entries.begin(), t.emb.entries.end(),
                       [](const EmbedEntry& e) { return e.kind == EmbedKind::Diag; });
}

// Locally trivial: the restriction to every proper submodule generated by a
// sub-multiset of summands is a trivial triple.  With at least two summand
// slots this reduces to triviality of each slot; for a single slot the
// vacuous case is resolved through the straight/diagonal dichotomy.
inline bool is_locally_trivial(const TripleSpec& t) {
    long slot_count = 0;
    for (const auto& s : t.V.summands) slot_count += s.mult;
    if (slot_count <= 1) return has_diagonal_entry(t);
    return all_summands_trivial(t);
}

// Strongly faithful: every summand sees every G-factor nontrivially, and a
// torus (when present) acts with finite kernel on each summand.
inline bool is_strongly_faithful(const TripleSpec& t) {
    for (const auto& s : t.V.summands) {
        for (std::size_t gi = 0; gi < t.G.factors.size(); ++gi)
            if (!s.acts(gi)) return false;
        if (t.G.torus_rank > 1) return false;
        if (t.G.torus_rank == 1 && s.charges[0] == 0) return false;
    }
    return true;
}

// --- Split kinds -----------------------------------------------------------

enum class SplitKind { solid, half_split, split, other };

inline std::string to_string(SplitKind k) {
    switch (k) {
        case SplitKind::solid: return "solid";
        case SplitKind::half_split: return "half_split";
        case SplitKind::split: return "split";
        case SplitKind::other: return "other";
    }
    return "?";
}

namespace detail {
enum class SlotRestriction { stays_irreducible, splits_dual_pair, reducible_other };

// Catalog answer to: does the G-irrep in this slot remain H-irreducible?
inline SlotRestriction slot_restriction(const TripleSpec& t, const EmbedEntry& e, int g_idx,
                                        const Weight& w) {
    const GroupFactor& gf = t.G.factors[g_idx];
    switch (e.kind) {
        case EmbedKind::Id:
        case EmbedKind::Diag:
            return SlotRestriction::stays_irreducible;
        case EmbedKind::DefiningSub:
            if (w == gf.defining_weight()) return SlotRestriction::stays_irreducible;
            // For sp_2n in sl_2n the dual defining module also stays irreducible.
            if (t.H.factors[e.h[0]].pres == Pres::SP &&
                w == dual_weight({gf.type(), gf.defining_weight()}).weight)
                return SlotRestriction::stays_irreducible;
            return SlotRestriction::reducible_other;
        case EmbedKind::VectorPad: {
            // Defining restricts as phi_1 + trivial; a half-spin of so_2k
            // restricted to the natural so_{2k-1} stays its spin module.
            const GroupFactor& hf = t.H.factors[e.h[0]];
            if (gf.pres == Pres::SO && gf.n % 2 == 0 && hf.pres == Pres::SO &&
                hf.n == gf.n - 1) {
                const SimpleType dt = gf.type();
                if (w == fundamental(dt, dt.rank) || w == fundamental(dt, dt.rank - 1))
                    return SlotRestriction::stays_irreducible;
            }
            return SlotRestriction::reducible_other;
        }
        case EmbedKind::Spin:
            if (w == gf.defining_weight()) return SlotRestriction::stays_irreducible;
            return SlotRestriction::reducible_other;
        case EmbedKind::SplitSum:
            if (w == gf.defining_weight()) return SlotRestriction::splits_dual_pair;
            return SlotRestriction::reducible_other;
        case EmbedKind::TensorPair:
            if (w == gf.defining_weight()) return SlotRestriction::stays_irreducible;
            return SlotRestriction::reducible_other;
        case EmbedKind::Lambda2:
            if (w == gf.defining_weight()) return SlotRestriction::stays_irreducible;
            return SlotRestriction::reducible_other;
    }
    return SlotRestriction::reducible_other;
}
}  // namespace detail

// Classify a minimal orthogonal G-submodule of t.V, given as either one
// self-dual summand index or a dual pair of indices.
inline SplitKind split_kind(const TripleSpec& t, const std::vector<std::size_t>& w) {
    validate(t);
    auto h_irreducible = [&](const ModuleSummand& s) -> std::optional<bool> {
        bool half = false;
        for (std::size_t gi = 0; gi < t.G.factors.size(); ++gi) {
            if (!s.acts(gi)) continue;
            const EmbedEntry* e = entry_for_g(t, static_cast<int>(gi));
            if (!e) return std::nullopt;  // a free G-factor keeps the slot as is
            auto r = detail::slot_restriction(t, *e, static_cast<int>(gi), s.slots[gi]);
            if (r == detail::SlotRestriction::reducible_other) return std::nullopt;
            if (r == detail::SlotRestriction::splits_dual_pair) {
                if (half) return std::nullopt;  // two splitting slots: outside catalog
                half = true;
            }
        }
        return !half;
    };

    if (w.size() == 1) {
        const auto& s = t.V.summands.at(w[0]);
        if (dual_summand(t.G, s).slots != s.slots ||
            summand_form_type(t.G, s) != FormType::orthogonal)
            throw std::invalid_argument("not a minimal orthogonal submodule");
        auto irr = h_irreducible(s);
        if (!irr) return SplitKind::other;
        return *irr ? SplitKind::solid : SplitKind::half_split;
    }
    if (w.size() == 2) {
        const auto& a = t.V.summands.at(w[0]);
        const auto& b = t.V.summands.at(w[1]);
        ModuleSummand da = dual_summand(t.G, a);
        if (da.slots != b.slots || da.charges != b.charges)
            throw std::invalid_argument("pair is not a dual pair");
        auto ia = h_irreducible(a), ib = h_irreducible(b);
        if (ia && ib && *ia && *ib) return SplitKind::split;
        return SplitKind::other;
    }
    throw std::invalid_argument("minimal orthogonal submodule has one or two summands");
}

}  // namespace orthex
