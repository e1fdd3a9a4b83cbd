#pragma once

// Lie-algebra factorizations g = h + s: Onishchik's table for simple g as
// data, the reduction steps for centers, rank-1 parts and straight
// subalgebras, and an exact numeric rank checker over explicit matrices.

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthex/group.hpp"
#include "orthex/oracle.hpp"

namespace orthex {

// Raised when a structural query mentions an embedding outside the catalog;
// callers may fall back to the numeric checker.
struct StructurallyUndecidable : std::runtime_error {
    explicit StructurallyUndecidable(const std::string& w) : std::runtime_error(w) {}
};

// A catalog-labeled subalgebra of a simple ambient algebra.
struct Subalgebra {
    std::vector<GroupFactor> factors;  // one factor, or two for the tensor pair
    EmbedKind kind = EmbedKind::Id;    // how the ambient defining module restricts
    int center_dim = 0;

    bool is_zero() const { return factors.empty() && center_dim == 0; }
    int dim() const {
        int d = center_dim;
        for (const auto& f : factors) d += f.dim();
        return d;
    }
};

inline Subalgebra whole_algebra(const GroupFactor& g) { return {{g}, EmbedKind::Id, 0}; }

struct TableORow {
    GroupFactor g;
    Subalgebra h;
    Subalgebra s;
};

// The nine rows of Table O, instantiated at a given parameter where the row
// is a family (rows one to three), otherwise fixed.
inline std::vector<TableORow> table_o_rows(int max_n = 12) {
    std::vector<TableORow> rows;
    auto so = [](int n) { return GroupFactor{Pres::SO, n}; };
    auto sl = [](int n) { return GroupFactor{Pres::SL, n}; };
    auto sp = [](int n) { return GroupFactor{Pres::SP, n}; };
    for (int n = 2; n <= max_n; ++n)
        rows.push_back({sl(2 * n),
                        {{sp(2 * n)}, EmbedKind::DefiningSub, 0},
                        {{sl(2 * n - 1)}, EmbedKind::VectorPad, 0}});
    for (int n = 3; n <= max_n; ++n)  // so_4 is not simple, so the family starts at so_6
        rows.push_back({so(2 * n),
                        {{sl(n)}, EmbedKind::SplitSum, 0},
                        {{so(2 * n - 1)}, EmbedKind::VectorPad, 0}});
    for (int n = 2; n <= max_n; ++n)
        rows.push_back({so(4 * n),
                        {{sp(2 * n), sl(2)}, EmbedKind::TensorPair, 0},
                        {{so(4 * n - 1)}, EmbedKind::VectorPad, 0}});
    rows.push_back({so(7), {{{Pres::G2, 7}}, EmbedKind::DefiningSub, 0},
                    {{so(6)}, EmbedKind::VectorPad, 0}});
    rows.push_back({so(7), {{{Pres::G2, 7}}, EmbedKind::DefiningSub, 0},
                    {{so(5)}, EmbedKind::VectorPad, 0}});
    rows.push_back({so(8), {{so(7)}, EmbedKind::Spin, 0}, {{so(7)}, EmbedKind::VectorPad, 0}});
    rows.push_back({so(8), {{so(7)}, EmbedKind::Spin, 0}, {{so(6)}, EmbedKind::VectorPad, 0}});
    rows.push_back({so(8), {{so(7)}, EmbedKind::Spin, 0}, {{so(5)}, EmbedKind::VectorPad, 0}});
    rows.push_back({so(16), {{so(9)}, EmbedKind::Spin, 0}, {{so(15)}, EmbedKind::VectorPad, 0}});
    return rows;
}

namespace detail {

inline bool subalgebra_matches(const Subalgebra& a, const Subalgebra& b) {
    return a.factors == b.factors && a.kind == b.kind;
}

inline bool in_catalog(const Subalgebra& a) {
    switch (a.kind) {
        case EmbedKind::Id:
        case EmbedKind::DefiningSub:
        case EmbedKind::VectorPad:
        case EmbedKind::Spin:
        case EmbedKind::SplitSum:
        case EmbedKind::TensorPair:
        case EmbedKind::Lambda2:
            return true;
        case EmbedKind::Diag:
            return false;
    }
    return false;
}

}  // namespace detail

// Decides whether (g, h, s) is a factorization for simple g and catalog-
// labeled semisimple h, s.  Trivial when h or s is all of g; otherwise a
// Table O lookup up to swapping h and s, after the dimension precheck.
inline bool is_factorization_simple(const GroupFactor& g, const Subalgebra& h,
                                    const Subalgebra& s) {
    auto is_whole = [&](const Subalgebra& a) {
        return a.factors.size() == 1 && a.factors[0] == g &&
               (a.kind == EmbedKind::Id || a.factors[0].n == g.n);
    };
    if (is_whole(h) || is_whole(s)) return true;
    if (h.is_zero() || s.is_zero()) return false;
    if (!detail::in_catalog(h) || !detail::in_catalog(s))
        throw StructurallyUndecidable("embedding label outside the factorization catalog");
    if (h.dim() + s.dim() < g.dim()) return false;
    const int max_n = g.n;  // parameters larger than dim g never match it
    for (const auto& row : table_o_rows(max_n)) {
        if (row.g != g) continue;
        if ((detail::subalgebra_matches(row.h, h) && detail::subalgebra_matches(row.s, s)) ||
            (detail::subalgebra_matches(row.h, s) && detail::subalgebra_matches(row.s, h)))
            return true;
    }
    return false;
}

// --- Reduction lemmas ---------------------------------------------------------

// A factorization query over a semisimple ambient algebra: every ideal
// carries the piece of h and of s living in it (empty = zero piece there).
struct FactorizationQuery {
    std::vector<GroupFactor> g_ideals;
    std::vector<std::optional<Subalgebra>> h, s;
    int h_center = 0, s_center = 0;
};

// Strips the center of s (and of h); a commutative s factorizes only
// trivially, which short-circuits to an answer.
inline std::optional<bool> semisimple_reduce(FactorizationQuery& q) {
    q.h_center = 0;
    q.s_center = 0;
    for (auto& piece : q.s)
        if (piece) piece->center_dim = 0;
    for (auto& piece : q.h)
        if (piece) piece->center_dim = 0;
    bool s_zero = true;
    for (const auto& piece : q.s)
        if (piece && !piece->is_zero()) s_zero = false;
    if (s_zero) {
        // (g, h, 0) is a factorization only when h covers g.
        for (std::size_t i = 0; i < q.g_ideals.size(); ++i) {
            const auto& piece = q.h[i];
            if (!piece || !(piece->factors.size() == 1 && piece->factors[0] == q.g_ideals[i]))
                return false;
        }
        return true;
    }
    return std::nullopt;
}

// Splits a query along the strongly-semisimple / rank-1 decomposition of the
// ambient algebra; the original answer is the conjunction of the parts.
inline std::pair<FactorizationQuery, FactorizationQuery> strong_split(
    const FactorizationQuery& q) {
    FactorizationQuery hi, lo;
    for (std::size_t i = 0; i < q.g_ideals.size(); ++i) {
        FactorizationQuery& dst = q.g_ideals[i].rank() > 1 ? hi : lo;
        dst.g_ideals.push_back(q.g_ideals[i]);
        dst.h.push_back(q.h[i]);
        dst.s.push_back(q.s[i]);
    }
    lo.h_center = q.h_center;
    lo.s_center = q.s_center;
    return {hi, lo};
}

// Lemma-fac4 step: g = g_1 + (rest), h = h_1 + (all of the rest); the query
// reduces to Table O lookups of h_1 against the projections of the simple
// ideals of s onto g_1.
inline bool straight_reduce(const GroupFactor& g1, const Subalgebra& h1,
                            const std::vector<Subalgebra>& s_projections) {
    for (const auto& proj : s_projections)
        if (is_factorization_simple(g1, h1, proj)) return true;
    return false;
}

// --- Numeric checker ------------------------------------------------------------

// Exact rank test for g = h + s given explicit spanning matrices inside a
// common realization of g.
inline bool numeric_factorization_check(const std::vector<Mat>& g_basis,
                                        const std::vector<Mat>& h_basis,
                                        const std::vector<Mat>& s_basis) {
    if (g_basis.empty()) throw std::invalid_argument("empty ambient basis");
    const std::size_t w = g_basis[0].rows() * g_basis[0].cols();
    EchelonBasis g_span(w);
    for (const Mat& m : g_basis) g_span.insert(flatten(m));
    const std::size_t dim_g = g_span.rank();
    EchelonBasis sum(w);
    for (const Mat& m : h_basis) {
        if (!g_span.contains(flatten(m)))
            throw std::invalid_argument("h basis leaves the ambient algebra");
        sum.insert(flatten(m));
    }
    for (const Mat& m : s_basis) {
        if (!g_span.contains(flatten(m)))
            throw std::invalid_argument("s basis leaves the ambient algebra");
        sum.insert(flatten(m));
    }
    return sum.rank() == dim_g;
}

// Instantiates one Table O row as explicit matrices and runs the rank test.
// The h side fixes the realization (and the invariant form, when g is
// orthogonal); phi_1 + k id subalgebras are cut out as stabilizers of k
// random vectors.
inline bool numeric_table_o_row_check(const TableORow& row, std::uint64_t seed = 1) {
    DefiningEmbedding de = defining_embedding(row.h.factors, row.g, row.h.kind);
    std::vector<Mat> g_basis;
    if (row.g.pres == Pres::SL)
        g_basis = detail::sl_basis(row.g.n);
    else
        g_basis = detail::so_basis(de.form.rows() ? de.form : detail::default_form(row.g));
    std::vector<Mat> h_basis;
    for (const auto& list : de.h)
        for (const Mat& m : list) h_basis.push_back(m);

    std::vector<Mat> s_basis;
    if (row.s.kind == EmbedKind::VectorPad && row.g.pres == Pres::SO) {
        const int k = row.g.n - row.s.factors[0].n;
        MatrixRep amb;
        amb.space_dim = row.g.n;
        amb.gens = g_basis;
        std::mt19937_64 rng(seed);
        // Common stabilizer of k generic vectors is so_{n-k}.
        Mat sys(static_cast<std::size_t>(row.g.n) * k, g_basis.size());
        std::vector<RatVec> pts;
        for (int i = 0; i < k; ++i) pts.push_back(random_vector(row.g.n, rng));
        for (std::size_t gi = 0; gi < g_basis.size(); ++gi)
            for (int i = 0; i < k; ++i) {
                RatVec xv = g_basis[gi].apply(pts[i]);
                for (int r = 0; r < row.g.n; ++r)
                    sys(static_cast<std::size_t>(i) * row.g.n + r, gi) = xv[r];
            }
        for (const auto& coeff : nullspace(sys)) {
            Mat m(row.g.n, row.g.n);
            for (std::size_t gi = 0; gi < g_basis.size(); ++gi)
                if (coeff[gi] != 0) m = m + g_basis[gi] * coeff[gi];
            s_basis.push_back(std::move(m));
        }
        const int ns = row.s.factors[0].n;
        if (static_cast<int>(s_basis.size()) != ns * (ns - 1) / 2)
            throw std::runtime_error("vector stabilizer has unexpected dimension");
    } else if (row.s.kind == EmbedKind::VectorPad && row.g.pres == Pres::SL) {
        const int m = row.s.factors[0].n;
        for (const Mat& y : detail::sl_basis(m)) {
            Mat big(row.g.n, row.g.n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) big(i, j) = y(i, j);
            s_basis.push_back(std::move(big));
        }
    } else {
        DefiningEmbedding ds = defining_embedding(row.s.factors, row.g, row.s.kind);
        for (const auto& list : ds.h)
            for (const Mat& m : list) s_basis.push_back(m);
    }
    return numeric_factorization_check(g_basis, h_basis, s_basis);
}

}  // namespace orthex
