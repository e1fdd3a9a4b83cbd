#pragma once

// Immediate castling transforms, greedy castling reduction, and congruence
// testing.  A move replaces F x SL(W) acting on U (x) W by F x SL(W') on
// U* (x) W' with dim W' = dim U - dim W; generic stabilizers are preserved.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "orthex/group.hpp"

namespace orthex {

struct CastlingMove {
    int summand = 0;
    int g_factor = -1;  // the SL(W) factor, or the full SL(U x W) target for tensor entries
    int h_slot = -1;    // slot inside the tensor entry playing W (triple moves only)
    long dim_u = 0;
    long dim_w = 0;

    long dim_w_new() const { return dim_u - dim_w; }
    bool decreasing() const { return dim_w_new() < dim_w; }
};

namespace detail {

inline bool is_defining_or_dual(const GroupFactor& f, const Weight& w, bool& dual) {
    if (w == f.defining_weight()) {
        dual = false;
        return true;
    }
    if (f.pres == Pres::SL && w == dual_weight({f.type(), f.defining_weight()}).weight) {
        dual = true;
        return true;
    }
    return false;
}

// Restricted to SL factors acting tensorially on a single summand; the rest
// of that summand (including multiplicity) plays the role of U.
inline std::optional<CastlingMove> group_move(const GroupSpec& g, const ModuleSpec& v,
                                              int factor, int summand) {
    const GroupFactor& f = g.factors[factor];
    if (f.pres != Pres::SL) return std::nullopt;
    int acting = -1;
    for (std::size_t si = 0; si < v.summands.size(); ++si)
        if (v.summands[si].acts(factor)) {
            if (acting >= 0) return std::nullopt;
            acting = static_cast<int>(si);
        }
    if (acting != summand) return std::nullopt;
    const ModuleSummand& s = v.summands[summand];
    bool dual = false;
    if (!is_defining_or_dual(f, s.slots[factor], dual)) return std::nullopt;
    Big u = s.mult;
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
        if (static_cast<int>(fi) == factor || !s.acts(fi)) continue;
        u *= dim_irrep({g.factors[fi].type(), s.slots[fi]});
    }
    if (u < f.n || !u.fits_slong_p()) return std::nullopt;
    CastlingMove m;
    m.summand = summand;
    m.g_factor = factor;
    m.dim_u = u.get_si();
    m.dim_w = f.n;
    return m;
}

}  // namespace detail

inline std::vector<CastlingMove> castling_moves(const GroupSpec& g, const ModuleSpec& v) {
    std::vector<CastlingMove> out;
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi)
        for (std::size_t si = 0; si < v.summands.size(); ++si)
            if (auto m = detail::group_move(g, v, static_cast<int>(fi), static_cast<int>(si)))
                out.push_back(*m);
    return out;
}

// Applies a group-level move.  The W factor becomes SL(W') (dropped when
// dim W' <= 1), the U slots are dualized, charges flip, and a zero W' drops
// the summand altogether.
inline std::pair<GroupSpec, ModuleSpec> apply_castle(const GroupSpec& g, const ModuleSpec& v,
                                                     const CastlingMove& m) {
    auto check = detail::group_move(g, v, m.g_factor, m.summand);
    if (!check || check->dim_u != m.dim_u || check->dim_w != m.dim_w)
        throw std::invalid_argument("invalid castling move");
    const long wn = m.dim_w_new();
    GroupSpec g2 = g;
    ModuleSpec v2 = v;
    ModuleSummand& s = v2.summands[m.summand];
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
        if (static_cast<int>(fi) == m.g_factor || !s.acts(fi)) continue;
        s.slots[fi] = dual_weight({g.factors[fi].type(), s.slots[fi]}).weight;
    }
    for (auto& c : s.charges) c = -c;
    if (wn >= 2) {
        g2.factors[m.g_factor] = {Pres::SL, static_cast<int>(wn)};
        s.slots[m.g_factor] = g2.factors[m.g_factor].defining_weight();
        return {g2, v2};
    }
    // Drop the SL(W') factor; with dim W' = 0 the summand disappears too.
    if (wn == 0) v2.summands.erase(v2.summands.begin() + m.summand);
    g2.factors.erase(g2.factors.begin() + m.g_factor);
    for (auto& sum : v2.summands) sum.slots.erase(sum.slots.begin() + m.g_factor);
    if (v2.summands.empty()) throw std::invalid_argument("castling removed the whole module");
    return {g2, v2};
}

// --- Canonical form and congruence ------------------------------------------

namespace detail {

inline void sort_spec(GroupSpec& g, ModuleSpec& v) {
    std::vector<std::size_t> order(g.factors.size());
    std::iota(order.begin(), order.end(), 0);
    auto factor_key = [&](std::size_t i) {
        std::vector<Weight> col;
        for (const auto& s : v.summands) col.push_back(s.slots[i]);
        return std::make_tuple(g.factors[i].pres, g.factors[i].n, col);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return factor_key(a) < factor_key(b); });
    GroupSpec ng;
    ng.torus_rank = g.torus_rank;
    for (std::size_t i : order) ng.factors.push_back(g.factors[i]);
    for (auto& s : v.summands) {
        std::vector<Weight> ns;
        for (std::size_t i : order) ns.push_back(s.slots[i]);
        s.slots = std::move(ns);
    }
    g = std::move(ng);
    std::sort(v.summands.begin(), v.summands.end());
}

}  // namespace detail

// Canonical representative for comparing castling-reduced specs: factors and
// summands sorted, with each SL factor's column dualized whenever that
// lowers the lexicographic order (an outer automorphism of the factor).
inline std::pair<GroupSpec, ModuleSpec> canonical_spec(GroupSpec g, ModuleSpec v) {
    detail::sort_spec(g, v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
            if (g.factors[fi].pres != Pres::SL) continue;
            ModuleSpec alt = v;
            for (auto& s : alt.summands)
                if (s.acts(fi))
                    s.slots[fi] = dual_weight({g.factors[fi].type(), s.slots[fi]}).weight;
            GroupSpec galt = g;
            detail::sort_spec(galt, alt);
            GroupSpec gcur = g;
            ModuleSpec cur = v;
            detail::sort_spec(gcur, cur);
            if (std::make_pair(galt.factors, alt.summands) <
                std::make_pair(gcur.factors, cur.summands)) {
                v = std::move(alt);
                changed = true;
            }
        }
    }
    detail::sort_spec(g, v);
    return {g, v};
}

// Greedy reduction: apply dimension-decreasing moves until none applies.
inline std::pair<GroupSpec, ModuleSpec> castle_reduce(GroupSpec g, ModuleSpec v) {
    while (true) {
        bool applied = false;
        for (const auto& m : castling_moves(g, v)) {
            if (!m.decreasing()) continue;
            std::tie(g, v) = apply_castle(g, v, m);
            applied = true;
            break;
        }
        if (!applied) break;
    }
    return {g, v};
}

inline bool congruent(const GroupSpec& ga, const ModuleSpec& va, const GroupSpec& gb,
                      const ModuleSpec& vb) {
    auto [ra, ma] = castle_reduce(ga, va);
    auto [rb, mb] = castle_reduce(gb, vb);
    auto ca = canonical_spec(ra, ma);
    auto cb = canonical_spec(rb, mb);
    return ca == cb;
}

// --- Triple-level moves --------------------------------------------------------

namespace detail {

// Locates the embedding entry owning a G factor, with its index.
inline std::pair<int, const EmbedEntry*> entry_of_g(const TripleSpec& t, int g_idx) {
    for (std::size_t i = 0; i < t.emb.entries.size(); ++i)
        for (int gi : t.emb.entries[i].g)
            if (gi == g_idx) return {static_cast<int>(i), &t.emb.entries[i]};
    return {-1, nullptr};
}

}  // namespace detail

// Moves applicable to a triple: either the SL(W) factor is shared between H
// and G through an Id entry (castled on both sides at once), or the G factor
// is the full SL of a tensor-embedded product and one tensor slot plays W.
inline std::vector<CastlingMove> castling_moves(const TripleSpec& t) {
    std::vector<CastlingMove> out;
    for (auto m : castling_moves(t.G, t.V)) {
        auto [ei, e] = detail::entry_of_g(t, m.g_factor);
        if (e && e->kind == EmbedKind::Id) out.push_back(m);
    }
    // Tensor-entry moves: W is one slot of the entry, U the rest.
    for (std::size_t ei = 0; ei < t.emb.entries.size(); ++ei) {
        const auto& e = t.emb.entries[ei];
        if (e.kind != EmbedKind::TensorPair) continue;
        const int gf = e.g[0];
        if (t.G.factors[gf].pres != Pres::SL) continue;
        int acting = -1;
        bool ok = true;
        for (std::size_t si = 0; si < t.V.summands.size(); ++si)
            if (t.V.summands[si].acts(gf)) {
                if (acting >= 0) ok = false;
                acting = static_cast<int>(si);
            }
        if (!ok || acting < 0) continue;
        const auto& s = t.V.summands[acting];
        bool dual = false;
        if (!detail::is_defining_or_dual(t.G.factors[gf], s.slots[gf], dual)) continue;
        if (s.mult != 1) continue;
        // Any other factor acting on this summand would sit outside U x W.
        bool alone = true;
        for (std::size_t fi = 0; fi < t.G.factors.size(); ++fi)
            if (static_cast<int>(fi) != gf && s.acts(fi)) alone = false;
        if (!alone) continue;
        for (int hslot = 0; hslot < static_cast<int>(e.h.size()); ++hslot) {
            const GroupFactor& w_factor = t.H.factors[e.h[hslot]];
            if (w_factor.pres != Pres::SL) continue;
            long u = 1;
            for (std::size_t k = 0; k < e.h.size(); ++k)
                if (static_cast<int>(k) != hslot) u *= t.H.factors[e.h[k]].n;
            if (u < w_factor.n) continue;
            CastlingMove m;
            m.summand = acting;
            m.g_factor = gf;
            m.h_slot = hslot;
            m.dim_u = u;
            m.dim_w = w_factor.n;
            out.push_back(m);
        }
    }
    return out;
}

inline TripleSpec apply_castle(const TripleSpec& t, const CastlingMove& m) {
    TripleSpec out = t;
    if (m.h_slot < 0) {
        // Shared SL(W) factor: castle the group-level spec and resize the
        // H factor attached through the Id entry.
        auto [ei, e] = detail::entry_of_g(t, m.g_factor);
        if (!e || e->kind != EmbedKind::Id) throw std::invalid_argument("move needs an Id entry");
        const int h_idx = e->h[0];
        auto [g2, v2] = apply_castle(t.G, t.V, m);
        const long wn = m.dim_w_new();
        out.G = g2;
        out.V = v2;
        if (wn >= 2) {
            out.H.factors[h_idx] = {Pres::SL, static_cast<int>(wn)};
        } else {
            out.H.factors.erase(out.H.factors.begin() + h_idx);
            out.emb.entries.erase(out.emb.entries.begin() + ei);
            for (auto& entry : out.emb.entries) {
                for (auto& hi : entry.h)
                    if (hi > h_idx) --hi;
                for (auto& gi : entry.g)
                    if (gi > m.g_factor) --gi;
            }
        }
        return out;
    }

    // Tensor-entry move: G keeps a full SL factor of the new size, the W slot
    // of the entry is resized or removed, and the U slots toggle duality.
    auto [entry_idx, entry_ptr] = detail::entry_of_g(t, m.g_factor);
    if (!entry_ptr || entry_ptr->kind != EmbedKind::TensorPair)
        throw std::invalid_argument("move needs a tensor entry");
    EmbedEntry& e = out.emb.entries[entry_idx];
    const long wn = m.dim_w_new();
    const long new_n = m.dim_u * std::max<long>(wn, 0);
    if (e.dual.empty()) e.dual.assign(e.h.size(), false);
    for (std::size_t k = 0; k < e.h.size(); ++k)
        if (static_cast<int>(k) != m.h_slot) e.dual[k] = !e.dual[k];
    normalize_dual(e);
    for (auto& c : out.V.summands[m.summand].charges) c = -c;
    const int h_idx = e.h[m.h_slot];
    if (wn >= 2) {
        out.H.factors[h_idx] = {Pres::SL, static_cast<int>(wn)};
        if (!e.dual.empty()) e.dual[m.h_slot] = false;
        normalize_dual(e);
        out.G.factors[m.g_factor] = {Pres::SL, static_cast<int>(new_n)};
        out.V.summands[m.summand].slots[m.g_factor] =
            out.G.factors[m.g_factor].defining_weight();
        return out;
    }
    if (wn <= 0) throw std::invalid_argument("tensor move would erase the module");
    // dim W' = 1: the W slot disappears.
    e.h.erase(e.h.begin() + m.h_slot);
    e.dual.erase(e.dual.begin() + m.h_slot);
    out.H.factors.erase(out.H.factors.begin() + h_idx);
    for (auto& entry : out.emb.entries)
        for (auto& hi : entry.h)
            if (hi > h_idx) --hi;
    out.G.factors[m.g_factor] = {Pres::SL, static_cast<int>(new_n)};
    out.V.summands[m.summand].slots[m.g_factor] = out.G.factors[m.g_factor].defining_weight();
    if (e.h.size() == 1) {
        // A single remaining slot must span the whole target.
        if (t.H.factors[e.h[0]].pres == Pres::SL && out.H.factors[e.h[0]].n == new_n) {
            e.kind = EmbedKind::Id;
        } else {
            throw std::invalid_argument("tensor move leaves a non-tensor entry");
        }
    }
    return out;
}

inline TripleSpec castle_reduce(TripleSpec t) {
    while (true) {
        bool applied = false;
        for (const auto& m : castling_moves(t)) {
            if (!m.decreasing()) continue;
            TripleSpec next;
            try {
                next = apply_castle(t, m);
            } catch (const std::invalid_argument&) {
                continue;
            }
            t = std::move(next);
            applied = true;
            break;
        }
        if (!applied) break;
    }
    return t;
}

}  // namespace orthex
