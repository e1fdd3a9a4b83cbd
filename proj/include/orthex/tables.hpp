#pragma once

// The diagram database: every classified diagram with its side conditions,
// closed-form invariant count where one is printed, the generator-degree
// sets of the A-series, and instantiation at concrete parameters.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthex/group.hpp"

namespace orthex {

struct DiagramEntry {
    std::string id;
    std::string summary;              // one-line description of the pattern
    std::optional<long> nu;           // printed invariant count, when constant
    std::string nu_note;              // formula or "oracle" when nu is open
    std::vector<int> degrees;         // A-series generator degrees (stored data)
    std::string side_conditions;
    int min_param = 0;                // 0 = not parametric
};

inline const std::vector<DiagramEntry>& diagram_table() {
    static const std::vector<DiagramEntry> table = {
        {"T1", "SL4 diagonal in SL4 x SL4 on phi1 + phi3 | phi2", 2, "", {}, "", 0},
        {"T2", "SO7 diagonal on phi1 | phi3", 2, "", {}, "", 0},
        {"T3", "SO8 diagonal on phi1 | phi3", 2, "", {}, "", 0},
        {"T4", "SO12 diagonal on phi1 | phi5", 2, "", {}, "", 0},
        {"T5", "SO7 diagonal on 2phi1 | phi3", 4, "", {}, "", 0},
        {"T6", "SO8 diagonal on 2phi1 | phi3", 4, "", {}, "", 0},
        {"T7", "SO8 diagonal on 3phi1 | phi3", 7, "", {}, "", 0},
        {"T8", "SO8 diagonal on phi3 | phi1 (x) phi1 with SO3, plus a module U",
         std::nullopt, "4 + tr.deg C(U)^Gcheck", {}, "", 0},
        {"T9", "diagonal SL2 across two symplectic tree components", std::nullopt,
         "computed by oracle", {}, "one of the two group components satisfies the "
         "degree conditions", 0},
        {"F1", "G2 in SO7 on phi1", 1, "", {}, "", 0},
        {"F2", "SO7 in SO8 by spin, on phi1", 1, "", {}, "", 0},
        {"F3", "SO9 in SO16 by spin, on phi1", 1, "", {}, "", 0},
        {"F4", "Sp2n x SL2 in SO4n on phi1", 1, "", {}, "n >= 2", 2},
        {"F5", "Spin7 x SO3 in SO8 x SO3 on phi1 (x) phi1", 3, "", {}, "", 0},
        {"F6", "SLn in SO2n by phi1 + phi(n-1), on phi1", 1, "", {}, "n >= 3", 3},
        {"F7", "Sp2n in SL2n on phi1 + phi(2n-1)", 1, "", {}, "n >= 2", 2},
        {"F8", "G2 in SO7 on 2phi1", 3, "", {}, "", 0},
        {"F9", "SO7 in SO8 by spin, on 2phi1", 3, "", {}, "", 0},
        {"F10", "SO7 in SO8 by spin, on 3phi1", 6, "", {}, "", 0},
        {"O", "Spin7 in SO8 with circles; SO8 sees t phi1 in total", std::nullopt,
         "computed by oracle", {}, "t <= 3 after stripping trivial summands", 0},
        {"L1", "Sp2n in SL2n on phi1", 0, "", {}, "n >= 2", 2},
        {"L2", "SL(2n+1) in SL(n(2n+1)) by phi2, on phi1", 0, "", {}, "n >= 2", 2},
        {"L3", "SO10 in SL16 by spin, on phi1", 0, "", {}, "", 0},
        {"L4", "SLs x SLt in SLst on phi1", 0, "", {}, "s > t", 0},
        {"L5", "SLn x Yk in SLn x Xk on phi1 (x) phi1", 0, "", {}, "k < n", 0},
        {"L6", "Sp2n x SL(2k+1) in SL2n x SL(2k+1) on phi1 (x) phi1", 0, "", {}, "2k < n", 0},
        {"L7", "SL(2n+1) x SL2 in SL(n(2n+1)) x SL2 on phi1 (x) phi1", 0, "", {}, "n >= 2", 2},
        {"A1", "G2 in SO7 on phi1", 1, "", {2}, "", 0},
        {"A2", "SO7 in SO8 by spin, on phi1", 1, "", {2}, "", 0},
        {"A3", "SO9 in SO16 by spin, on phi1", 1, "", {2}, "", 0},
        {"A4", "SO11 in SO12 on phi5", 1, "", {4}, "", 0},
        {"A5", "SLn x Yn in SLn x Xn on phi1 (x) phi1", 1, "", {}, "degrees {n}", 0},
        {"A6", "Sp2n x SL2 in SO4n on phi1", 1, "", {2}, "n >= 2", 2},
        {"A7", "G2 x SL2 in SO7 x SL2 on phi1 (x) phi1", 1, "", {4}, "", 0},
        {"A8", "Spin7 x SL2 in SO8 x SL2 on phi1 (x) phi1", 1, "", {4}, "", 0},
        {"A9", "Spin7 x SO3 in SO8 x SO3 on phi1 (x) phi1", 3, "", {2, 4, 6}, "", 0},
        {"A10", "Spin7 x SL3 in SO8 x SL3 on phi1 (x) phi1", 1, "", {6}, "", 0},
    };
    return table;
}

inline const DiagramEntry* find_diagram(const std::string& id) {
    for (const auto& e : diagram_table())
        if (e.id == id) return &e;
    return nullptr;
}

// --- Instantiation --------------------------------------------------------------

namespace detail {

inline ModuleSummand blank_summand(const GroupSpec& g) {
    ModuleSummand s;
    for (const auto& f : g.factors) s.slots.push_back(Weight(f.rank(), 0));
    s.charges.resize(g.torus_rank, 0);
    return s;
}

}  // namespace detail

// TripleSpec for one diagram at the given parameter (ignored by fixed
// diagrams; the minimal parameter is used when n is zero or too small).
inline TripleSpec instantiate(const std::string& id, int n = 0) {
    auto so = [](int m) { return GroupFactor{Pres::SO, m}; };
    auto sl = [](int m) { return GroupFactor{Pres::SL, m}; };
    auto sp = [](int m) { return GroupFactor{Pres::SP, m}; };
    const GroupFactor g2{Pres::G2, 7};
    const DiagramEntry* entry = find_diagram(id);
    if (!entry) throw std::invalid_argument("unknown diagram id: " + id);
    if (entry->min_param && n < entry->min_param) n = entry->min_param;

    TripleSpec t;
    auto add = [&](std::vector<std::pair<int, Weight>> parts, long mult = 1) {
        ModuleSummand s = detail::blank_summand(t.G);
        for (auto& [idx, w] : parts) s.slots[idx] = w;
        s.mult = mult;
        t.V.summands.push_back(std::move(s));
    };
    auto diagonal_pair = [&](GroupFactor f) {
        t.G = {{f, f}, 0};
        t.H = {{f}, 0};
        t.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}}};
    };
    auto straight = [&](GroupFactor h, GroupFactor gf, EmbedKind kind) {
        t.G = {{gf}, 0};
        t.H = {{h}, 0};
        t.emb.entries = {{kind, {0}, {0}, {}}};
    };

    if (id == "T1") {
        diagonal_pair(sl(4));
        add({{0, sl(4).phi(1)}});
        add({{0, sl(4).phi(3)}});
        add({{1, sl(4).phi(2)}});
    } else if (id == "T2" || id == "T5") {
        diagonal_pair(so(7));
        add({{0, so(7).phi(1)}}, id == "T5" ? 2 : 1);
        add({{1, so(7).phi(3)}});
    } else if (id == "T3" || id == "T6" || id == "T7") {
        diagonal_pair(so(8));
        add({{0, so(8).phi(1)}}, id == "T3" ? 1 : (id == "T6" ? 2 : 3));
        add({{1, so(8).phi(3)}});
    } else if (id == "T4") {
        diagonal_pair(so(12));
        add({{0, so(12).phi(1)}});
        add({{1, so(12).phi(5)}});
    } else if (id == "T8") {
        // SO8 diagonal, an SO3 shared with the tensor summand, and a second
        // SO3 playing Gcheck on U = phi1 (x) phi1.
        t.G = {{so(8), so(8), so(3), so(3)}, 0};
        t.H = {{so(8), so(3), so(3)}, 0};
        t.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}},
                         {EmbedKind::Id, {1}, {2}, {}},
                         {EmbedKind::Id, {2}, {3}, {}}};
        add({{0, so(8).phi(3)}});
        add({{1, so(8).phi(1)}, {2, so(3).phi(1)}});
        add({{2, so(3).phi(1)}, {3, so(3).phi(1)}});
    } else if (id == "T9") {
        const GroupFactor a1 = sl(2);
        t.G = {{a1, a1, a1, a1}, 0};
        t.H = {{a1, a1, a1}, 0};
        t.emb.entries = {{EmbedKind::Diag, {0}, {0, 1}, {}},
                         {EmbedKind::Id, {1}, {2}, {}},
                         {EmbedKind::Id, {2}, {3}, {}}};
        add({{0, {1}}, {2, {1}}});
        add({{1, {1}}, {3, {1}}});
    } else if (id == "F1" || id == "A1") {
        straight(g2, so(7), EmbedKind::DefiningSub);
        add({{0, so(7).phi(1)}});
    } else if (id == "F8") {
        straight(g2, so(7), EmbedKind::DefiningSub);
        add({{0, so(7).phi(1)}}, 2);
    } else if (id == "F2" || id == "A2" || id == "F9" || id == "F10") {
        straight(so(7), so(8), EmbedKind::Spin);
        add({{0, so(8).phi(1)}}, id == "F9" ? 2 : (id == "F10" ? 3 : 1));
    } else if (id == "F3" || id == "A3") {
        straight(so(9), so(16), EmbedKind::Spin);
        add({{0, so(16).phi(1)}});
    } else if (id == "F4" || id == "A6") {
        t.G = {{so(4 * n)}, 0};
        t.H = {{sp(2 * n), sl(2)}, 0};
        t.emb.entries = {{EmbedKind::TensorPair, {0, 1}, {0}, {}}};
        add({{0, so(4 * n).phi(1)}});
    } else if (id == "F5" || id == "A9") {
        t.G = {{so(8), so(3)}, 0};
        t.H = {{so(7), so(3)}, 0};
        t.emb.entries = {{EmbedKind::Spin, {0}, {0}, {}}, {EmbedKind::Id, {1}, {1}, {}}};
        add({{0, so(8).phi(1)}, {1, so(3).phi(1)}});
    } else if (id == "F6") {
        straight(sl(n), so(2 * n), EmbedKind::SplitSum);
        add({{0, so(2 * n).phi(1)}});
    } else if (id == "F7") {
        straight(sp(2 * n), sl(2 * n), EmbedKind::DefiningSub);
        add({{0, sl(2 * n).phi(1)}});
        add({{0, sl(2 * n).phi(2 * n - 1)}});
    } else if (id == "O") {
        // Spin7 in SO8 on phi1 (x) phi1(SO3), with U = phi1 (x) phi1 under
        // SO3 x Gcheck: t = 3 and the triple is neither LT nor SF.
        t.G = {{so(8), so(3), so(3)}, 0};
        t.H = {{so(7), so(3), so(3)}, 0};
        t.emb.entries = {{EmbedKind::Spin, {0}, {0}, {}},
                         {EmbedKind::Id, {1}, {1}, {}},
                         {EmbedKind::Id, {2}, {2}, {}}};
        add({{0, so(8).phi(1)}, {1, so(3).phi(1)}});
        add({{1, so(3).phi(1)}, {2, so(3).phi(1)}});
    } else if (id == "L1") {
        straight(sp(2 * n), sl(2 * n), EmbedKind::DefiningSub);
        add({{0, sl(2 * n).phi(1)}});
    } else if (id == "L2") {
        straight(sl(2 * n + 1), sl(n * (2 * n + 1)), EmbedKind::Lambda2);
        add({{0, sl(n * (2 * n + 1)).phi(1)}});
    } else if (id == "L3") {
        straight(so(10), sl(16), EmbedKind::Spin);
        add({{0, sl(16).phi(1)}});
    } else if (id == "L4") {
        const int s = n >= 3 ? n : 3, u = 2;
        t.G = {{sl(s * u)}, 0};
        t.H = {{sl(s), sl(u)}, 0};
        t.emb.entries = {{EmbedKind::TensorPair, {0, 1}, {0}, {}}};
        add({{0, sl(s * u).phi(1)}});
    } else if (id == "L5") {
        // SL4 x SO3 inside SL4 x SL3 (Y = SO3 maximal in X = SL3), k < n.
        t.G = {{sl(4), sl(3)}, 0};
        t.H = {{sl(4), so(3)}, 0};
        t.emb.entries = {{EmbedKind::Id, {0}, {0}, {}},
                         {EmbedKind::DefiningSub, {1}, {1}, {}}};
        add({{0, sl(4).phi(1)}, {1, sl(3).phi(1)}});
    } else if (id == "L6") {
        // Sp6 x SL3 inside SL6 x SL3 (n = 3, k = 1).
        t.G = {{sl(6), sl(3)}, 0};
        t.H = {{sp(6), sl(3)}, 0};
        t.emb.entries = {{EmbedKind::DefiningSub, {0}, {0}, {}},
                         {EmbedKind::Id, {1}, {1}, {}}};
        add({{0, sl(6).phi(1)}, {1, sl(3).phi(1)}});
    } else if (id == "L7") {
        const int big = n * (2 * n + 1);
        t.G = {{sl(big), sl(2)}, 0};
        t.H = {{sl(2 * n + 1), sl(2)}, 0};
        t.emb.entries = {{EmbedKind::Lambda2, {0}, {0}, {}}, {EmbedKind::Id, {1}, {1}, {}}};
        add({{0, sl(big).phi(1)}, {1, sl(2).phi(1)}});
    } else if (id == "A4") {
        straight(so(11), so(12), EmbedKind::VectorPad);
        add({{0, so(12).phi(5)}});
    } else if (id == "A5") {
        // SL3 x SO3 inside SL3 x SL3 on phi1 (x) phi1: one invariant, the
        // determinant, of degree n = 3.
        t.G = {{sl(3), sl(3)}, 0};
        t.H = {{sl(3), so(3)}, 0};
        t.emb.entries = {{EmbedKind::Id, {0}, {0}, {}},
                         {EmbedKind::DefiningSub, {1}, {1}, {}}};
        add({{0, sl(3).phi(1)}, {1, sl(3).phi(1)}});
    } else if (id == "A7") {
        t.G = {{so(7), sl(2)}, 0};
        t.H = {{g2, sl(2)}, 0};
        t.emb.entries = {{EmbedKind::DefiningSub, {0}, {0}, {}}, {EmbedKind::Id, {1}, {1}, {}}};
        add({{0, so(7).phi(1)}, {1, sl(2).phi(1)}});
    } else if (id == "A8") {
        t.G = {{so(8), sl(2)}, 0};
        t.H = {{so(7), sl(2)}, 0};
        t.emb.entries = {{EmbedKind::Spin, {0}, {0}, {}}, {EmbedKind::Id, {1}, {1}, {}}};
        add({{0, so(8).phi(1)}, {1, sl(2).phi(1)}});
    } else if (id == "A10") {
        t.G = {{so(8), sl(3)}, 0};
        t.H = {{so(7), sl(3)}, 0};
        t.emb.entries = {{EmbedKind::Spin, {0}, {0}, {}}, {EmbedKind::Id, {1}, {1}, {}}};
        add({{0, so(8).phi(1)}, {1, sl(3).phi(1)}});
    } else {
        throw std::invalid_argument("no instantiation for diagram " + id);
    }
    validate(t);
    return t;
}

}  // namespace orthex
