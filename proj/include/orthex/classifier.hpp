#pragma once

// The decision procedure: route a triple to the locally-trivial /
// strongly-faithful / mixed / irreducible handling, match it against the
// diagram database, and return a verdict with the invariant count.
// Completeness is claimed only inside the theorems' hypotheses; anything
// else returns "unknown" (with an oracle check on request) rather than a
// false negative.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orthex/castling.hpp"
#include "orthex/factorization.hpp"
#include "orthex/group.hpp"
#include "orthex/oracle.hpp"
#include "orthex/tables.hpp"
#include "orthex/tree.hpp"

namespace orthex {

enum class Ternary { yes, no, unknown };

inline std::string to_string(Ternary t) {
    switch (t) {
        case Ternary::yes: return "yes";
        case Ternary::no: return "no";
        case Ternary::unknown: return "unknown";
    }
    return "?";
}

struct Verdict {
    Ternary exceptional = Ternary::unknown;
    std::optional<long> nu;
    std::string matched;  // diagram id(s)
    std::string route;
    std::optional<OracleVerdict> oracle;
    std::vector<std::string> warnings;
};

struct ClassifyOptions {
    bool verify = false;
    std::uint64_t seed = 1;
    int samples = 3;
    OracleLimits limits{};
    bool assume_maximal = false;
};

namespace detail {

// --- Table T lookups ---------------------------------------------------------

struct SideShape {
    Subalgebra sgp;        // S_ii with its embedding label
    std::string tag;       // shape key used to name the diagram
    bool consumes_so3 = false;
};

// The candidate actions of Table T: given the diagonal factor and the
// summands of one side, return the generic stabilizer the table assigns.
inline std::optional<SideShape> table_t_lookup(const TripleSpec& comp, const GroupFactor& h12,
                                               int g_target,
                                               const std::vector<const ModuleSummand*>& side) {
    auto so = [](int m) { return GroupFactor{Pres::SO, m}; };
    auto sl = [](int m) { return GroupFactor{Pres::SL, m}; };
    // Bucket the side's summands by shape relative to the diagonal factor.
    long phi1_mult = 0;     // pure copies of the defining module (SO types)
    long spin_mult = 0;     // pure spin / half-spin copies
    long split_phi1 = 0;    // SL types: defining and its dual
    long split_dual = 0;
    long lam2_mult = 0;     // phi_2 of sl4
    long tensor_so3 = 0;    // so8 defining tensored with a 3-dim A1 module
    long other = 0;
    const SimpleType gt = h12.type();
    for (const ModuleSummand* s : side) {
        std::vector<int> partners;
        for (std::size_t fi = 0; fi < comp.G.factors.size(); ++fi)
            if (s->acts(fi) && static_cast<int>(fi) != g_target)
                partners.push_back(static_cast<int>(fi));
        const Weight& w = s->slots[g_target];
        const bool pure = partners.empty();
        if (h12.pres == Pres::SL) {
            if (pure && w == h12.defining_weight())
                split_phi1 += s->mult;
            else if (pure && w == dual_weight({gt, h12.defining_weight()}).weight)
                split_dual += s->mult;
            else if (pure && h12.n == 4 && w == fundamental(gt, 2))
                lam2_mult += s->mult;
            else
                ++other;
            continue;
        }
        if (pure && w == h12.defining_weight()) {
            phi1_mult += s->mult;
        } else if (pure && gt.family == Family::B && w == fundamental(gt, gt.rank)) {
            spin_mult += s->mult;
        } else if (pure && gt.family == Family::D &&
                   (w == fundamental(gt, gt.rank) || w == fundamental(gt, gt.rank - 1))) {
            spin_mult += s->mult;
        } else if (partners.size() == 1 && h12 == so(8) && w == so(8).defining_weight()) {
            const GroupFactor& pf = comp.G.factors[partners[0]];
            const Weight& pw = s->slots[partners[0]];
            bool so3_like =
                pf.type() == SimpleType{Family::A, 1} && dim_irrep({pf.type(), pw}) == 3;
            if (so3_like && s->mult == 1)
                ++tensor_so3;
            else
                ++other;
        } else {
            ++other;
        }
    }
    if (other) return std::nullopt;
    const int kinds = (phi1_mult ? 1 : 0) + (spin_mult ? 1 : 0) + (lam2_mult ? 1 : 0) +
                      ((split_phi1 || split_dual) ? 1 : 0) + (tensor_so3 ? 1 : 0);
    if (kinds != 1) return std::nullopt;
    if (split_phi1 == 1 && split_dual == 1 && h12.pres == Pres::SL && h12.n % 2 == 0)
        return SideShape{{{sl(h12.n - 1)}, EmbedKind::VectorPad, 0}, "split", false};
    if (split_phi1 || split_dual) return std::nullopt;
    if (lam2_mult == 1 && h12 == sl(4))
        return SideShape{{{GroupFactor{Pres::SP, 4}}, EmbedKind::DefiningSub, 0}, "lam2", false};
    if (lam2_mult) return std::nullopt;
    if (spin_mult == 1) {
        if (h12 == so(7))
            return SideShape{{{GroupFactor{Pres::G2, 7}}, EmbedKind::DefiningSub, 0}, "spin",
                             false};
        if (h12 == so(8)) return SideShape{{{so(7)}, EmbedKind::Spin, 0}, "spin", false};
        if (h12 == so(12)) return SideShape{{{sl(6)}, EmbedKind::SplitSum, 0}, "spin", false};
        return std::nullopt;
    }
    if (spin_mult) return std::nullopt;
    if (phi1_mult >= 1 && h12.pres == Pres::SO) {
        const int n = h12.n;
        if (phi1_mult == 1)
            return SideShape{{{so(n - 1)}, EmbedKind::VectorPad, 0}, "phi1", false};
        if (phi1_mult == 2 && (n == 7 || n == 8))
            return SideShape{{{so(n - 2)}, EmbedKind::VectorPad, 0}, "2phi1", false};
        if (phi1_mult == 3 && n == 8)
            return SideShape{{{so(5)}, EmbedKind::VectorPad, 0}, "3phi1", false};
        return std::nullopt;
    }
    if (tensor_so3 == 1)
        return SideShape{{{so(5)}, EmbedKind::VectorPad, 0}, "so3tensor", true};
    return std::nullopt;
}

inline std::string t_diagram_id(const GroupFactor& h12, const std::string& a,
                                const std::string& b) {
    auto key = std::minmax(a, b);
    const std::string lo = key.first, hi = key.second;
    if (h12 == GroupFactor{Pres::SL, 4}) return "T1";
    if (h12 == GroupFactor{Pres::SO, 7}) {
        if (lo == "phi1" && hi == "spin") return "T2";
        if (lo == "2phi1" && hi == "spin") return "T5";
    }
    if (h12 == GroupFactor{Pres::SO, 8}) {
        if (lo == "phi1" && hi == "spin") return "T3";
        if (lo == "2phi1" && hi == "spin") return "T6";
        if (lo == "3phi1" && hi == "spin") return "T7";
        if (lo == "so3tensor" && hi == "spin") return "T8";
    }
    if (h12 == GroupFactor{Pres::SO, 12}) return "T4";
    return "T?";
}

// --- Per-component verdicts ----------------------------------------------------

inline Verdict component_unknown(const std::string& route, const std::string& why) {
    Verdict v;
    v.exceptional = Ternary::unknown;
    v.route = route;
    v.warnings.push_back(why);
    return v;
}

inline std::optional<long> oracle_nu(const TripleSpec& t, const ClassifyOptions& opts,
                                     std::vector<std::string>& warnings) {
    try {
        OracleVerdict v = is_exceptional_oracle(t, opts.seed, opts.samples, opts.limits);
        return v.codim;
    } catch (const OracleError& e) {
        warnings.push_back(std::string("oracle unavailable for nu: ") + e.what());
        return std::nullopt;
    }
}

inline std::optional<long> oracle_codim_of(const GroupSpec& g, const ModuleSpec& v,
                                           const ClassifyOptions& opts,
                                           std::vector<std::string>& warnings) {
    if (v.summands.empty()) return 0;
    try {
        MatrixRep rep = rep_build(g, v, opts.limits);
        return rep.space_dim - generic_orbit_dim(rep, opts.seed, opts.samples);
    } catch (const OracleError& e) {
        warnings.push_back(std::string("oracle unavailable for nu: ") + e.what());
        return std::nullopt;
    }
}

inline Verdict classify_lt_component(const TripleSpec& comp, const EmbedEntry& diag,
                                     const ClassifyOptions& opts) {
    Verdict out;
    out.route = "locally_trivial";
    const int g1 = diag.g[0], g2 = diag.g[1];
    const GroupFactor h12 = comp.G.factors[g1];

    std::vector<const ModuleSummand*> side1, side2;
    for (const auto& s : comp.V.summands) {
        if (s.acts(g1) && s.acts(g2)) {
            // A summand seeing both halves of the pair cannot stay trivial on
            // proper submodules.
            out.exceptional = Ternary::no;
            return out;
        }
        if (s.acts(g1)) side1.push_back(&s);
        if (s.acts(g2)) side2.push_back(&s);
    }

    if (h12.type() == SimpleType{Family::A, 1}) {
        try {
            bool exc = t9_exceptional(comp);
            out.exceptional = exc ? Ternary::yes : Ternary::no;
            if (exc) {
                out.matched = "T9";
                out.nu = oracle_nu(comp, opts, out.warnings);
            }
            return out;
        } catch (const std::invalid_argument&) {
            // Not of the symplectic tree shape: no SL2-diagonal diagram fits.
            out.exceptional = Ternary::no;
            return out;
        }
    }

    auto s1 = table_t_lookup(comp, h12, g1, side1);
    auto s2 = table_t_lookup(comp, h12, g2, side2);
    if (!s1 || !s2) {
        out.exceptional = Ternary::no;
        return out;
    }
    bool factorizes = false;
    try {
        factorizes = is_factorization_simple(h12, s1->sgp, s2->sgp);
    } catch (const StructurallyUndecidable&) {
        return component_unknown(out.route, "factorization outside the structural catalog");
    }
    if (!factorizes) {
        out.exceptional = Ternary::no;
        return out;
    }
    out.exceptional = Ternary::yes;
    out.matched = t_diagram_id(h12, s1->tag, s2->tag);
    const DiagramEntry* e = find_diagram(out.matched);
    if (e && e->nu) {
        out.nu = *e->nu;
    } else if (out.matched == "T8") {
        // nu = 4 plus the transcendence degree of the U-part invariants under
        // the factors other than the SO3 consumed by the tensor side.
        int so3_factor = -1;
        const auto& tensor_side = s1->consumes_so3 ? side1 : side2;
        for (const ModuleSummand* s : tensor_side)
            for (std::size_t fi = 0; fi < comp.G.factors.size(); ++fi)
                if (s->acts(fi) && static_cast<int>(fi) != g1 && static_cast<int>(fi) != g2)
                    so3_factor = static_cast<int>(fi);
        GroupSpec rest;
        std::vector<int> keep;
        for (std::size_t fi = 0; fi < comp.G.factors.size(); ++fi) {
            if (static_cast<int>(fi) == g1 || static_cast<int>(fi) == g2 ||
                static_cast<int>(fi) == so3_factor)
                continue;
            keep.push_back(static_cast<int>(fi));
            rest.factors.push_back(comp.G.factors[fi]);
        }
        ModuleSpec u_part;
        for (const auto& s : comp.V.summands) {
            if (s.acts(g1) || s.acts(g2)) continue;
            ModuleSummand ns;
            ns.mult = s.mult;
            // The SO3 slot is forgotten as an action but kept as multiplicity,
            // so the space of U is unchanged.
            if (so3_factor >= 0 && s.acts(so3_factor)) {
                Big d = dim_irrep(
                    {comp.G.factors[so3_factor].type(), s.slots[so3_factor]});
                ns.mult *= d.get_si();
            }
            for (int fi : keep) ns.slots.push_back(s.slots[fi]);
            u_part.summands.push_back(std::move(ns));
        }
        auto part = oracle_codim_of(rest, u_part, opts, out.warnings);
        if (part) out.nu = 4 + *part;
    }
    return out;
}

inline Verdict classify_sf_component(const TripleSpec& comp, const EmbedEntry& entry,
                                     const ClassifyOptions& opts) {
    Verdict out;
    out.route = "strongly_faithful";
    out.exceptional = Ternary::no;
    auto so = [](int m) { return GroupFactor{Pres::SO, m}; };
    const GroupFactor& h1 = comp.H.factors[entry.h[0]];
    const GroupFactor& gf = comp.G.factors[entry.g[0]];
    const int target = entry.g[0];

    // Count pure phi1 copies and recognize the F5 tensor shape.
    long phi1 = 0;
    long tensor_so3 = 0;
    bool dual_pair_phi1 = false, other = false;
    long dual_seen = 0;
    for (const auto& s : comp.V.summands) {
        std::vector<int> partners;
        for (std::size_t fi = 0; fi < comp.G.factors.size(); ++fi)
            if (s.acts(fi) && static_cast<int>(fi) != target) partners.push_back(static_cast<int>(fi));
        const Weight& w = s.slots[target];
        if (partners.empty() && w == gf.defining_weight()) {
            phi1 += s.mult;
        } else if (partners.empty() && gf.pres == Pres::SL &&
                   w == dual_weight({gf.type(), gf.defining_weight()}).weight) {
            dual_seen += s.mult;
        } else if (partners.size() == 1 && w == gf.defining_weight() && s.mult == 1) {
            const GroupFactor& pf = comp.G.factors[partners[0]];
            if (pf.type() == SimpleType{Family::A, 1} &&
                dim_irrep({pf.type(), s.slots[partners[0]]}) == 3)
                ++tensor_so3;
            else
                other = true;
        } else {
            other = true;
        }
    }
    dual_pair_phi1 = (phi1 == 1 && dual_seen == 1);
    if (other) return out;

    const bool plain = tensor_so3 == 0 && dual_seen == 0;
    switch (entry.kind) {
        case EmbedKind::DefiningSub:
            if (h1.pres == Pres::G2 && gf == so(7) && plain && phi1 >= 1 && phi1 <= 2) {
                out.exceptional = Ternary::yes;
                out.matched = phi1 == 1 ? "F1" : "F8";
            }
            if (h1.pres == Pres::SP && gf.pres == Pres::SL && dual_pair_phi1 &&
                tensor_so3 == 0) {
                out.exceptional = Ternary::yes;
                out.matched = "F7";
            }
            break;
        case EmbedKind::Spin:
            if (h1 == so(7) && gf == so(8) && plain && phi1 >= 1 && phi1 <= 3) {
                out.exceptional = Ternary::yes;
                out.matched = phi1 == 1 ? "F2" : (phi1 == 2 ? "F9" : "F10");
            }
            if (h1 == so(7) && gf == so(8) && tensor_so3 == 1 && phi1 == 0 && dual_seen == 0) {
                out.exceptional = Ternary::yes;
                out.matched = "F5";
            }
            if (h1 == so(9) && gf == so(16) && plain && phi1 == 1) {
                out.exceptional = Ternary::yes;
                out.matched = "F3";
            }
            break;
        case EmbedKind::TensorPair: {
            bool sp_sl2 = entry.h.size() == 2;
            if (sp_sl2) {
                const GroupFactor& a = comp.H.factors[entry.h[0]];
                const GroupFactor& b = comp.H.factors[entry.h[1]];
                sp_sl2 = (a.pres == Pres::SP && b == GroupFactor{Pres::SL, 2}) ||
                         (b.pres == Pres::SP && a == GroupFactor{Pres::SL, 2});
            }
            if (gf.pres == Pres::SO && phi1 == 1 && plain && sp_sl2) {
                out.exceptional = Ternary::yes;
                out.matched = "F4";
            }
            break;
        }
        case EmbedKind::SplitSum:
            if (phi1 == 1 && plain && h1.n >= 3) {
                out.exceptional = Ternary::yes;
                out.matched = "F6";
            }
            break;
        default:
            break;
    }
    if (out.exceptional == Ternary::yes) {
        const DiagramEntry* e = find_diagram(out.matched);
        if (e && e->nu) out.nu = *e->nu;
    }
    return out;
}

inline Verdict classify_o_component(const TripleSpec& comp, const EmbedEntry& entry,
                                    const ClassifyOptions& opts) {
    Verdict out;
    out.route = "mixed_O";
    auto so = [](int m) { return GroupFactor{Pres::SO, m}; };
    const int target = entry.g[0];
    if (!(entry.kind == EmbedKind::Spin && comp.H.factors[entry.h[0]] == so(7) &&
          comp.G.factors[target] == so(8))) {
        out.exceptional = Ternary::no;
        return out;
    }
    // Every summand the SO8 touches must be built on its phi1; count the
    // total phi1 multiplicity including tensor partners.
    Big t_count = 0;
    for (const auto& s : comp.V.summands) {
        if (!s.acts(target)) continue;
        if (s.slots[target] != comp.G.factors[target].defining_weight()) {
            out.exceptional = Ternary::no;
            return out;
        }
        Big partner_dim = s.mult;
        for (std::size_t fi = 0; fi < comp.G.factors.size(); ++fi)
            if (s.acts(fi) && static_cast<int>(fi) != target)
                partner_dim *= dim_irrep({comp.G.factors[fi].type(), s.slots[fi]});
        t_count += partner_dim;
    }
    if (t_count < 1 || t_count > 3) {
        out.exceptional = Ternary::no;
        return out;
    }
    out.exceptional = Ternary::yes;
    out.matched = "O";
    out.nu = oracle_nu(comp, opts, out.warnings);
    return out;
}

// Irreducible route: castle-reduce, then match the L and A series.
inline Verdict classify_irreducible(const TripleSpec& t, const ClassifyOptions& opts) {
    Verdict out;
    out.route = "irreducible";
    auto so = [](int m) { return GroupFactor{Pres::SO, m}; };
    auto sl = [](int m) { return GroupFactor{Pres::SL, m}; };

    // H must act irreducibly for the classification to apply.
    if (t.V.summands.size() != 1 || t.V.summands[0].mult != 1)
        return component_unknown(out.route, "classification needs an irreducible module");
    for (std::size_t fi = 0; fi < t.G.factors.size(); ++fi) {
        if (!t.V.summands[0].acts(fi)) continue;
        const EmbedEntry* e = entry_for_g(t, static_cast<int>(fi));
        if (!e) continue;
        auto r = slot_restriction(t, *e, static_cast<int>(fi), t.V.summands[0].slots[fi]);
        if (r != SlotRestriction::stays_irreducible)
            return component_unknown(out.route, "H does not act irreducibly");
    }

    TripleSpec r = castle_reduce(t);
    if (is_trivial_triple(r)) {
        out.exceptional = Ternary::yes;
        out.matched = "L4";  // reduced along the SL_s x SL_t chain to a trivial pair
        out.nu = oracle_nu(r, opts, out.warnings);
        return out;
    }
    if (r.V.summands.size() != 1) return component_unknown(out.route, "reduction left a sum");
    const ModuleSummand& s = r.V.summands[0];

    struct Slot {
        int g;
        const EmbedEntry* e;
    };
    std::vector<Slot> slots;
    for (std::size_t fi = 0; fi < r.G.factors.size(); ++fi)
        if (s.acts(fi)) slots.push_back({static_cast<int>(fi), entry_for_g(r, static_cast<int>(fi))});
    auto defining_slot = [&](const Slot& sl_) {
        return s.slots[sl_.g] == r.G.factors[sl_.g].defining_weight() ||
               (r.G.factors[sl_.g].pres == Pres::SL &&
                s.slots[sl_.g] ==
                    dual_weight({r.G.factors[sl_.g].type(), r.G.factors[sl_.g].defining_weight()})
                        .weight);
    };

    auto match_yes = [&](const std::string& id) {
        out.exceptional = Ternary::yes;
        out.matched = id;
        const DiagramEntry* e = find_diagram(id);
        if (e && e->nu) out.nu = *e->nu;
    };

    if (slots.size() == 1 && defining_slot(slots[0])) {
        const Slot& a = slots[0];
        const EmbedEntry* e = a.e;
        if (e) {
            const GroupFactor& h1 = r.H.factors[e->h[0]];
            const GroupFactor& gf = r.G.factors[a.g];
            if (e->kind == EmbedKind::DefiningSub && h1.pres == Pres::SP && gf.pres == Pres::SL) {
                match_yes("L1");
                return out;
            }
            if (e->kind == EmbedKind::Lambda2) {
                match_yes("L2");
                return out;
            }
            if (e->kind == EmbedKind::Spin && h1 == so(10) && gf == sl(16)) {
                match_yes("L3");
                return out;
            }
            if (e->kind == EmbedKind::TensorPair && gf.pres == Pres::SL) {
                bool all_sl = true;
                for (int hi : e->h) all_sl = all_sl && r.H.factors[hi].pres == Pres::SL;
                if (all_sl) {
                    match_yes("L4");
                    return out;
                }
            }
        }
    }
    if (slots.size() == 1 && slots[0].e && slots[0].e->kind == EmbedKind::VectorPad &&
        r.H.factors[slots[0].e->h[0]] == so(11) && r.G.factors[slots[0].g] == so(12)) {
        // A4: the natural SO11 inside SO12 acting on a half-spin module.
        const SimpleType d6 = r.G.factors[slots[0].g].type();
        if (s.slots[slots[0].g] == fundamental(d6, 6) ||
            s.slots[slots[0].g] == fundamental(d6, 5)) {
            match_yes("A4");
            return out;
        }
    }
    if (slots.size() == 2) {
        // Normalize: one "main" slot and one companion circle slot.
        for (int main = 0; main < 2; ++main) {
            const Slot& a = slots[main];
            const Slot& b = slots[1 - main];
            if (!defining_slot(a) || !defining_slot(b)) continue;
            const EmbedEntry* ea = a.e;
            const EmbedEntry* eb = b.e;
            if (!ea || !eb) continue;
            if (eb->kind != EmbedKind::Id) continue;
            const GroupFactor& ga = r.G.factors[a.g];
            const GroupFactor& gb = r.G.factors[b.g];
            const GroupFactor& ha = r.H.factors[ea->h[0]];
            if (ea->kind == EmbedKind::Id && gb.pres == Pres::SL) {
                // L5 / A5 shape needs a proper subgroup on the circle side: the
                // companion slot must carry the proper entry instead.
                continue;
            }
            if (ea->kind == EmbedKind::DefiningSub && ha.pres == Pres::SP && ga.pres == Pres::SL &&
                gb.pres == Pres::SL && gb.n % 2 == 1 && 2 * gb.n <= ga.n) {
                match_yes("L6");
                return out;
            }
            if (ea->kind == EmbedKind::Lambda2 && gb == sl(2)) {
                match_yes("L7");
                return out;
            }
            if (ea->kind == EmbedKind::DefiningSub && ha.pres == Pres::G2 && ga == so(7) &&
                gb == sl(2)) {
                match_yes("A7");
                return out;
            }
            if (ea->kind == EmbedKind::Spin && ha == so(7) && ga == so(8)) {
                if (gb == sl(2)) {
                    match_yes("A8");
                    return out;
                }
                if (gb == sl(3)) {
                    match_yes("A10");
                    return out;
                }
            }
            if (ga.pres == Pres::SL && gb.pres == Pres::SL) {
                // Y_k maximal inside X_k = SL_k with an SL_n circle: the L5
                // family for k < n, A5 for k = n (one invariant, the pairing
                // determinant of degree n).
                if (ga.n < gb.n) {
                    match_yes("L5");
                    return out;
                }
                if (ga.n == gb.n) {
                    match_yes("A5");
                    return out;
                }
            }
        }
    }
    // The H_{s,t,k} family: a tensor pair of SLs on the big factor with
    // isomorphic circles elsewhere.  The classification says every nu = 0
    // exceptional triple is congruent to this shape or to L1-L7, but not
    // every member of the shape is exceptional, so the table alone cannot
    // decide and the verdict stays open for the oracle.
    if (!slots.empty()) {
        const Slot* big = nullptr;
        bool circles_ok = true;
        for (const auto& sl_ : slots) {
            if (sl_.e && sl_.e->kind == EmbedKind::TensorPair) {
                big = &sl_;
            } else if (!sl_.e || sl_.e->kind != EmbedKind::Id) {
                circles_ok = false;
            }
        }
        if (big && circles_ok && defining_slot(*big) && r.G.factors[big->g].pres == Pres::SL) {
            bool all_sl = true;
            for (int hi : big->e->h) all_sl = all_sl && r.H.factors[hi].pres == Pres::SL;
            long st = r.G.factors[big->g].n;
            Big k = 1;
            for (const auto& sl_ : slots)
                if (&sl_ != big) k *= dim_irrep({r.G.factors[sl_.g].type(), s.slots[sl_.g]});
            if (all_sl && k < st)
                return component_unknown(
                    out.route, "matches the general SL_s x SL_t x X_k family, which the tables "
                               "do not decide");
        }
    }
    // Inside the hypotheses and unmatched: the classification is complete.
    out.exceptional = Ternary::no;
    return out;
}

}  // namespace detail

// Pattern matching of a single component against the diagram database.
// Returns the diagram id, or nothing when no entry fits.
inline std::optional<std::string> match_diagram(const TripleSpec& component,
                                                const ClassifyOptions& opts = {});

inline Verdict classify(const TripleSpec& t, const ClassifyOptions& opts = {});

namespace detail {

inline Verdict classify_semisimple_component(const TripleSpec& comp, const ClassifyOptions& opts) {
    if (is_trivial_triple(comp)) {
        Verdict out;
        out.route = "oracle_only";
        out.exceptional = Ternary::yes;
        out.warnings.push_back("trivial component (H and G have the same image)");
        out.nu = oracle_nu(comp, opts, out.warnings);
        return out;
    }
    const EmbedEntry* diag = nullptr;
    const EmbedEntry* proper = nullptr;
    int diag_count = 0, proper_count = 0;
    for (const auto& e : comp.emb.entries) {
        if (e.kind == EmbedKind::Diag) {
            diag = &e;
            ++diag_count;
        } else if (e.kind != EmbedKind::Id) {
            proper = &e;
            ++proper_count;
        }
    }
    if (diag_count == 1 && proper_count == 0) return classify_lt_component(comp, *diag, opts);
    if (diag_count == 0 && proper_count == 1) {
        if (is_strongly_faithful(comp)) return classify_sf_component(comp, *proper, opts);
        return classify_o_component(comp, *proper, opts);
    }
    return component_unknown("oracle_only",
                             "embedding outside the maximal straight/diagonal dichotomy");
}

}  // namespace detail

// Complement directions of the H-torus image inside Z(G), as coordinate
// directions (a Q-complement suffices for the triviality test).
inline std::vector<int> torus_complement_coords(const TripleSpec& t) {
    EchelonBasis image(static_cast<std::size_t>(t.G.torus_rank));
    for (const auto& col : t.emb.torus_map) {
        RatVec v(col.begin(), col.end());
        image.insert(std::move(v));
    }
    std::vector<int> out;
    for (int c = 0; c < t.G.torus_rank; ++c) {
        RatVec e(t.G.torus_rank);
        e[c] = 1;
        if (!image.contains(e)) {
            out.push_back(c);
            RatVec e2(t.G.torus_rank);
            e2[c] = 1;
            image.insert(std::move(e2));
        }
    }
    return out;
}

inline Verdict classify(const TripleSpec& t, const ClassifyOptions& opts) {
    validate(t);
    Verdict out;

    const bool reductive = t.G.torus_rank > 0 || t.H.torus_rank > 0;
    if (reductive) {
        out.route = "reductive_reduc";
        const bool orthogonal = is_orthogonal_module(t.G, t.V);
        // Strip the torus, classify the semisimple part, and test that the
        // complement torus adds nothing to the invariants.  Outside the
        // orthogonal hypothesis only the negative directions decide.
        TripleSpec core = t;
        core.G.torus_rank = 0;
        core.H.torus_rank = 0;
        core.emb.torus_map.clear();
        for (auto& s : core.V.summands) s.charges.clear();
        Verdict inner = classify(core, ClassifyOptions{false, opts.seed, opts.samples,
                                                       opts.limits, opts.assume_maximal});
        out.matched = inner.matched;
        for (const auto& w : inner.warnings) out.warnings.push_back(w);
        if (inner.exceptional == Ternary::no) {
            out.exceptional = Ternary::no;
        } else if (inner.exceptional == Ternary::unknown) {
            out.exceptional = Ternary::unknown;
        } else {
            std::vector<std::vector<long>> dirs;
            for (int c : torus_complement_coords(t)) {
                std::vector<long> per_summand;
                for (const auto& s : t.V.summands) per_summand.push_back(s.charges[c]);
                dirs.push_back(std::move(per_summand));
            }
            try {
                bool trivial = torus_triviality_check(core.G, core.V, dirs, opts.seed,
                                                      opts.samples, opts.limits);
                if (!trivial)
                    out.exceptional = Ternary::no;
                else if (orthogonal)
                    out.exceptional = Ternary::yes;
                else {
                    out.exceptional = Ternary::unknown;
                    out.warnings.push_back(
                        "reductive sufficiency needs an orthogonal module");
                }
                if (out.exceptional == Ternary::yes) {
                    // nu of the reductive triple comes from the full orbit.
                    out.nu = detail::oracle_nu(t, opts, out.warnings);
                }
            } catch (const OracleError& e) {
                out.exceptional = Ternary::unknown;
                out.warnings.push_back(std::string("torus check unavailable: ") + e.what());
            }
        }
    } else if (!is_orthogonal_module(t.G, t.V)) {
        out = detail::classify_irreducible(t, opts);
    } else {
        auto comps = decompose_components(t);
        bool all_yes = true, any_no = false, any_unknown = false, nu_known = true;
        long nu_sum = 0;
        std::vector<std::string> matched;
        std::string route;
        for (const auto& comp : comps) {
            Verdict cv = detail::classify_semisimple_component(comp, opts);
            if (cv.exceptional == Ternary::no) any_no = true;
            if (cv.exceptional == Ternary::unknown) any_unknown = true;
            if (cv.exceptional != Ternary::yes) all_yes = false;
            if (cv.nu)
                nu_sum += *cv.nu;
            else
                nu_known = false;
            if (!cv.matched.empty()) matched.push_back(cv.matched);
            if (route.empty() && cv.route != "oracle_only") route = cv.route;
            for (const auto& w : cv.warnings) out.warnings.push_back(w);
        }
        out.route = route.empty() ? "oracle_only" : route;
        if (any_no)
            out.exceptional = Ternary::no;
        else if (any_unknown)
            out.exceptional = Ternary::unknown;
        else if (all_yes) {
            out.exceptional = Ternary::yes;
            if (nu_known) out.nu = nu_sum;
        }
        std::string joined;
        for (const auto& m : matched) {
            if (!joined.empty()) joined += "+";
            joined += m;
        }
        out.matched = joined;
    }

    if (!opts.assume_maximal &&
        (out.route == "locally_trivial" || out.route == "strongly_faithful" ||
         out.route == "mixed_O"))
        out.warnings.push_back(
            "H is assumed maximal in G for the table routes; pass --assume-maximal to confirm");
    if (opts.verify) {
        try {
            OracleVerdict ov = is_exceptional_oracle(t, opts.seed, opts.samples, opts.limits);
            out.oracle = ov;
            if (out.exceptional == Ternary::yes && !ov.exceptional)
                out.warnings.push_back("oracle mismatch: table says exceptional, oracle says no");
            if (out.exceptional == Ternary::no && ov.exceptional)
                out.warnings.push_back("oracle mismatch: table says no, oracle says exceptional");
            if (out.exceptional == Ternary::unknown) {
                out.exceptional = ov.exceptional ? Ternary::yes : Ternary::no;
                out.route = "oracle_only";
                if (ov.exceptional && !out.nu) out.nu = ov.codim;
                out.warnings.push_back(
                    "verdict decided by the orbit oracle outside the table hypotheses");
                if (!is_orthogonal_module(t.G, t.V))
                    out.warnings.push_back(
                        "orbit equality certifies exceptionality in the sense of rational "
                        "invariants (Rosenlicht); the action need not be stable");
            }
            if (out.exceptional == Ternary::yes && out.nu && *out.nu != ov.codim)
                out.warnings.push_back("oracle mismatch: nu differs from the generic codimension");
        } catch (const OracleError& e) {
            out.warnings.push_back(std::string("oracle unavailable: ") + e.what());
        }
    }
    return out;
}

inline std::optional<std::string> match_diagram(const TripleSpec& component,
                                                const ClassifyOptions& opts) {
    Verdict v = classify(component, opts);
    if (v.exceptional == Ternary::yes && !v.matched.empty()) return v.matched;
    return std::nullopt;
}

// Invariant count of a matched diagram: the stored value when the paper
// prints one, otherwise the oracle on the instantiated parts.
inline std::optional<long> nu_of(const std::string& id, const TripleSpec& instance,
                                 const ClassifyOptions& opts = {}) {
    const DiagramEntry* e = find_diagram(id);
    if (!e) return std::nullopt;
    if (e->nu) return e->nu;
    Verdict v = classify(instance, opts);
    return v.nu;
}

}  // namespace orthex
