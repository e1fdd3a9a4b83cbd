#pragma once

// Explicit exact-rational matrix realizations of the catalog representations
// and embeddings, plus generic orbit-dimension and stabilizer computations.
// This is the ground-truth engine: exceptionality of a triple is certified by
// comparing generic orbit dimensions of the H- and G-images, all over Q.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthex/group.hpp"
#include "orthex/matrix.hpp"

namespace orthex {

struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleLimits {
    int dim_cap = 256;
};

// --- Defining realizations --------------------------------------------------

namespace detail {

inline Mat antidiag_form(int n) {
    Mat b(n, n);
    for (int i = 0; i < n; ++i) b(i, n - 1 - i) = 1;
    return b;
}

inline Mat symplectic_form(int n) {
    Mat j(n, n);
    for (int i = 0; i < n / 2; ++i) {
        j(i, n - 1 - i) = 1;
        j(n - 1 - i, i) = -1;
    }
    return j;
}

inline Mat block_diag(const Mat& a, const Mat& b) {
    Mat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

inline Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() != n) throw std::invalid_argument("inverse: singular matrix");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Basis of sl_n: off-diagonal units then the Cartan differences.
inline std::vector<Mat> sl_basis(int n) {
    std::vector<Mat> b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat m(n, n);
            m(i, j) = 1;
            b.push_back(m);
        }
    for (int i = 0; i + 1 < n; ++i) {
        Mat m(n, n);
        m(i, i) = 1;
        m(i + 1, i + 1) = -1;
        b.push_back(m);
    }
    return b;
}

// so(B) = { B^{-1} A : A antisymmetric }, sp(J) = { J^{-1} S : S symmetric }.
inline std::vector<Mat> so_basis(const Mat& form) {
    const std::size_t n = form.rows();
    Mat binv = inverse(form);
    std::vector<Mat> b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Mat a(n, n);
            a(i, j) = 1;
            a(j, i) = -1;
            b.push_back(binv * a);
        }
    return b;
}

inline std::vector<Mat> sp_basis(const Mat& form) {
    const std::size_t n = form.rows();
    Mat jinv = inverse(form);
    std::vector<Mat> b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Mat s(n, n);
            s(i, j) += 1;
            s(j, i) += 1;
            b.push_back(jinv * s);
        }
    return b;
}

// --- Hyperbolic normalization (for spin constructions) ----------------------

struct HyperbolicBasis {
    // Columns of T are e_1..e_k, f_1..f_k(, u); B(e_i, f_i) = 1, B(u, u) = 1.
    int pairs = 0;
    bool odd = false;
    Mat T, Tinv;
};

// Works for forms in which every row has exactly one nonzero entry (all the
// catalog forms are of this monomial shape); diagonal fixed points are paired
// off as (c, -c) or must be a single rational square.
inline HyperbolicBasis hyperbolic_basis(const Mat& B) {
    const int n = static_cast<int>(B.rows());
    std::vector<int> partner(n, -1);
    for (int i = 0; i < n; ++i) {
        int cnt = 0;
        for (int j = 0; j < n; ++j)
            if (B(i, j) != 0) {
                partner[i] = j;
                ++cnt;
            }
        if (cnt != 1) throw OracleError("hyperbolic_basis: form is not monomial");
    }
    std::vector<std::pair<int, int>> hyp;
    std::vector<int> fixed;
    std::vector<bool> used(n, false);
    for (int i = 0; i < n; ++i) {
        if (used[i]) continue;
        if (partner[i] == i) {
            fixed.push_back(i);
            used[i] = true;
        } else {
            hyp.push_back({i, partner[i]});
            used[i] = used[partner[i]] = true;
        }
    }
    std::vector<RatVec> e, f;
    std::optional<RatVec> u;
    for (auto [i, j] : hyp) {
        RatVec ei(n), fj(n);
        ei[i] = 1;
        fj[j] = 1 / B(i, j);
        e.push_back(ei);
        f.push_back(fj);
    }
    // Pair diagonal entries (c, -c) into hyperbolic planes.
    std::vector<int> leftovers;
    std::vector<bool> done(fixed.size(), false);
    for (std::size_t a = 0; a < fixed.size(); ++a) {
        if (done[a]) continue;
        bool paired = false;
        for (std::size_t b = a + 1; b < fixed.size() && !paired; ++b) {
            if (done[b]) continue;
            if (B(fixed[a], fixed[a]) == -B(fixed[b], fixed[b])) {
                const Rat c = B(fixed[a], fixed[a]);
                RatVec ev(n), fv(n);
                ev[fixed[a]] = 1;
                ev[fixed[b]] = 1;
                fv[fixed[a]] = Rat(1) / (2 * c);
                fv[fixed[b]] = Rat(-1) / (2 * c);
                e.push_back(ev);
                f.push_back(fv);
                done[a] = done[b] = true;
                paired = true;
            }
        }
        if (!paired) leftovers.push_back(fixed[a]);
    }
    if (leftovers.size() > 1) throw OracleError("hyperbolic_basis: form not rationally split");
    HyperbolicBasis hb;
    if (!leftovers.empty()) {
        int i = leftovers[0];
        Rat c = B(i, i);
        Rat root;
        {
            Big num = c.get_num(), den = c.get_den();
            if (num < 0) throw OracleError("hyperbolic_basis: non-square diagonal value");
            Big rn = sqrt(num), rd = sqrt(den);
            if (rn * rn != num || rd * rd != den)
                throw OracleError("hyperbolic_basis: non-square diagonal value");
            root = Rat(rn, rd);
        }
        RatVec uv(n);
        uv[i] = 1 / root;
        u = uv;
        hb.odd = true;
    }
    hb.pairs = static_cast<int>(e.size());
    if (2 * hb.pairs + (hb.odd ? 1 : 0) != n)
        throw OracleError("hyperbolic_basis: incomplete pairing");
    hb.T = Mat(n, n);
    for (int a = 0; a < hb.pairs; ++a)
        for (int r = 0; r < n; ++r) {
            hb.T(r, a) = e[a][r];
            hb.T(r, hb.pairs + a) = f[a][r];
        }
    if (hb.odd)
        for (int r = 0; r < n; ++r) hb.T(r, 2 * hb.pairs) = (*u)[r];
    hb.Tinv = inverse(hb.T);
    return hb;
}

// --- Clifford / spin construction -------------------------------------------

// Spinor module Lambda(C^k) with basis indexed by bitmasks; creation and
// scaled annihilation operators give gamma(e_a), gamma(f_a) with
// gamma(x)gamma(y) + gamma(y)gamma(x) = 2 B(x, y).
struct CliffordOps {
    int k = 0;
    bool odd = false;
    std::vector<Mat> gamma_e, gamma_f;
    Mat gamma_u;

    explicit CliffordOps(const HyperbolicBasis& hb) : k(hb.pairs), odd(hb.odd) {
        const int dim = 1 << k;
        auto sign_below = [&](unsigned mask, int a) {
            int s = 0;
            for (int b = 0; b < a; ++b)
                if (mask & (1u << b)) ++s;
            return s % 2 == 0 ? 1 : -1;
        };
        for (int a = 0; a < k; ++a) {
            Mat ce(dim, dim), cf(dim, dim);
            for (unsigned m = 0; m < static_cast<unsigned>(dim); ++m) {
                if (!(m & (1u << a))) ce(m | (1u << a), m) = sign_below(m, a);
                if (m & (1u << a)) cf(m & ~(1u << a), m) = 2 * sign_below(m, a);
            }
            gamma_e.push_back(ce);
            gamma_f.push_back(cf);
        }
        if (odd) {
            gamma_u = Mat(dim, dim);
            for (unsigned m = 0; m < static_cast<unsigned>(dim); ++m)
                gamma_u(m, m) = (__builtin_popcount(m) % 2 == 0) ? 1 : -1;
        }
    }

    // gamma of a vector given in hyperbolic coordinates (e..., f..., u).
    Mat gamma(const RatVec& hyp_coords) const {
        const int dim = 1 << k;
        Mat g(dim, dim);
        for (int a = 0; a < k; ++a) {
            if (hyp_coords[a] != 0) g = g + gamma_e[a] * hyp_coords[a];
            if (hyp_coords[k + a] != 0) g = g + gamma_f[a] * hyp_coords[k + a];
        }
        if (odd && hyp_coords[2 * k] != 0) g = g + gamma_u * hyp_coords[2 * k];
        return g;
    }
};

// Cached spin data of one orthogonal defining space.
struct SpinContext {
    HyperbolicBasis hb;
    std::shared_ptr<CliffordOps> cl;
    Mat form;

    explicit SpinContext(const Mat& B) : hb(hyperbolic_basis(B)), form(B) {
        cl = std::make_shared<CliffordOps>(hb);
    }

    // Image of X in so(B) on the full spinor module.
    Mat spin(const Mat& X) const {
        const int n = static_cast<int>(form.rows());
        const int dim = 1 << hb.pairs;
        Mat rho(dim, dim);
        for (int i = 0; i < n; ++i) {
            // basis vector v_i = column i of T; dual v^i: B(v_i, v^j) = delta.
            RatVec vi(n);
            for (int r = 0; r < n; ++r) vi[r] = hb.T(r, i);
            // duals in hyperbolic coordinates: e_a <-> f_a, u <-> u.
            int idual = i < hb.pairs ? hb.pairs + i
                       : (i < 2 * hb.pairs ? i - hb.pairs : i);
            RatVec xvi_hyp = hb.Tinv.apply(X.apply(vi));
            RatVec dual_hyp(n);
            dual_hyp[idual] = 1;
            Mat a = cl->gamma(xvi_hyp), b = cl->gamma(dual_hyp);
            rho = rho + (a * b - b * a) * Rat(1, 8);
        }
        return rho;
    }
};

// --- G2 inside so_7 ----------------------------------------------------------

// The standard generic 3-form whose annihilator inside so(7) for the identity
// form is a split g2; validated at construction time.
inline const std::vector<Mat>& g2_basis() {
    static std::vector<Mat> basis = [] {
        const int n = 7;
        Mat form = Mat::identity(n);
        // phi = e123 + e145 + e167 + e246 - e257 - e347 - e356
        std::vector<std::array<int, 4>> terms = {
            {1, 2, 3, +1}, {1, 4, 5, +1}, {1, 6, 7, +1}, {2, 4, 6, +1},
            {2, 5, 7, -1}, {3, 4, 7, -1}, {3, 5, 6, -1}};
        std::map<std::array<int, 3>, Rat> phi;
        auto set_term = [&](int a, int b, int c, int s) {
            int idx[3] = {a - 1, b - 1, c - 1};
            int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
            int sign6[6] = {1, 1, 1, -1, -1, -1};
            for (int p = 0; p < 6; ++p)
                phi[{idx[perm[p][0]], idx[perm[p][1]], idx[perm[p][2]]}] = s * sign6[p];
        };
        for (auto& t : terms) set_term(t[0], t[1], t[2], t[3]);
        auto phival = [&](int a, int b, int c) -> Rat {
            auto it = phi.find({a, b, c});
            return it == phi.end() ? Rat(0) : it->second;
        };
        std::vector<Mat> so7 = so_basis(form);
        // Solve (X . phi) = 0 over the 21-dimensional so(7): X.phi (u,v,w) =
        // -phi(Xu,v,w) - phi(u,Xv,w) - phi(u,v,Xw).
        std::vector<std::array<int, 3>> slots;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) slots.push_back({a, b, c});
        Mat sys(slots.size(), so7.size());
        for (std::size_t col = 0; col < so7.size(); ++col) {
            const Mat& X = so7[col];
            for (std::size_t row = 0; row < slots.size(); ++row) {
                auto [a, b, c] = slots[row];
                Rat v;
                for (int r = 0; r < n; ++r) {
                    if (X(r, a) != 0) v += X(r, a) * phival(r, b, c);
                    if (X(r, b) != 0) v += X(r, b) * phival(a, r, c);
                    if (X(r, c) != 0) v += X(r, c) * phival(a, b, r);
                }
                sys(row, col) = v;
            }
        }
        auto kernel = nullspace(sys);
        if (kernel.size() != 14) throw OracleError("g2 construction: annihilator is not 14-dim");
        std::vector<Mat> out;
        for (const auto& coeffs : kernel) {
            Mat X(n, n);
            for (std::size_t k = 0; k < so7.size(); ++k)
                if (coeffs[k] != 0) X = X + so7[k] * coeffs[k];
            out.push_back(X);
        }
        return out;
    }();
    return basis;
}

inline Mat g2_form() { return Mat::identity(7); }

}  // namespace detail

// --- Slot functors -----------------------------------------------------------

namespace detail {

using SlotFunctor = std::function<Mat(const Mat&)>;

inline std::vector<unsigned> subsets_of_size(int n, int k) {
    std::vector<unsigned> out;
    for (unsigned m = 0; m < (1u << n); ++m)
        if (__builtin_popcount(m) == k) out.push_back(m);
    return out;
}

// Exterior power by derivation.
inline SlotFunctor lambda_functor(int n, int k, int& out_dim) {
    auto subs = subsets_of_size(n, k);
    std::map<unsigned, int> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index[subs[i]] = static_cast<int>(i);
    out_dim = static_cast<int>(subs.size());
    return [n, k, subs, index](const Mat& X) {
        Mat m(subs.size(), subs.size());
        for (std::size_t c = 0; c < subs.size(); ++c) {
            unsigned S = subs[c];
            for (int i = 0; i < n; ++i) {
                if (!(S & (1u << i))) continue;
                for (int j = 0; j < n; ++j) {
                    if (X(j, i) == 0) continue;
                    if (j != i && (S & (1u << j))) continue;  // repeated vector
                    unsigned T = (S & ~(1u << i)) | (1u << j);
                    // sign: move j into i's slot
                    int sgn = 1;
                    if (j != i) {
                        int lo = std::min(i, j) + 1, hi = std::max(i, j);
                        for (int b = lo; b < hi; ++b)
                            if (S & (1u << b)) sgn = -sgn;
                    }
                    m(index.at(T), c) += X(j, i) * sgn;
                }
            }
        }
        return m;
    };
}

// Symmetric power of the 2-dimensional defining module (A1 factors only).
inline SlotFunctor sym2_functor(int m, int& out_dim) {
    out_dim = m + 1;
    // basis x^{m-a} y^a, a = 0..m
    return [m](const Mat& X) {
        Mat r(m + 1, m + 1);
        for (int a = 0; a <= m; ++a) {
            // d/dt of (x + t(X00 x + X10 y))^{m-a} (y + t(X01 x + X11 y))^a
            if (m - a > 0) {
                r(a, a) += (m - a) * X(0, 0);
                r(a + 1, a) += (m - a) * X(1, 0);
            }
            if (a > 0) {
                r(a, a) += a * X(1, 1);
                r(a - 1, a) += a * X(0, 1);
            }
        }
        return r;
    };
}

// Restriction of matrices to an invariant subspace spanned by nullspace-style
// vectors (each has a designated unit coordinate).
struct SubspaceRestriction {
    std::vector<RatVec> basis;
    std::vector<std::size_t> unit_coords;

    Mat restrict(const Mat& big) const {
        const std::size_t d = basis.size();
        Mat r(d, d);
        for (std::size_t c = 0; c < d; ++c) {
            RatVec img = big.apply(basis[c]);
            for (std::size_t k = 0; k < d; ++k) r(k, c) = img[unit_coords[k]];
        }
        return r;
    }
};

// Lambda^2_0 for a symplectic factor: kernel of the contraction with the form.
inline SlotFunctor lambda20_functor(int n, const Mat& J, int& out_dim) {
    int lam_dim = 0;
    SlotFunctor lam = lambda_functor(n, 2, lam_dim);
    auto subs = subsets_of_size(n, 2);
    Mat jinv = inverse(J);
    Mat contraction(1, lam_dim);
    for (int c = 0; c < lam_dim; ++c) {
        unsigned S = subs[c];
        int i = __builtin_ctz(S);
        int j = __builtin_ctz(S & ~(1u << i));
        // omega-dual contraction of e_i ^ e_j
        contraction(0, c) = jinv(i, j) - jinv(j, i);
    }
    auto kernel = nullspace(contraction);
    SubspaceRestriction sub;
    for (const auto& v : kernel) {
        std::size_t unit = 0;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] == 1) unit = k;
        sub.basis.push_back(v);
        sub.unit_coords.push_back(unit);
    }
    // Re-derive unit coordinates robustly: nullspace() puts 1 at free columns.
    out_dim = static_cast<int>(sub.basis.size());
    return [lam, sub](const Mat& X) { return sub.restrict(lam(X)); };
}

}  // namespace detail

// --- MatrixRep ---------------------------------------------------------------

struct MatrixRep {
    int space_dim = 0;
    std::vector<Mat> gens;
    // Per group factor: [begin, end) range into gens; torus coordinates map
    // one generator each, appended after the factor blocks.
    std::vector<std::pair<int, int>> factor_gens;
    std::vector<int> torus_gens;
    int algebra_dim = 0;  // rank of the span of gens on this space

    std::shared_ptr<const struct RepContext> ctx;  // builder state for embeddings
};

struct RepContext {
    GroupSpec g;
    ModuleSpec v;
    std::vector<Mat> forms;  // defining-space form per factor (empty for SL)
    std::vector<std::vector<Mat>> defining;              // defining basis per factor
    std::vector<detail::SlotFunctor> push;               // factor -> action on V
    std::vector<std::shared_ptr<detail::SpinContext>> spin;  // per factor, lazily built
    std::vector<int> summand_offsets;
    std::vector<long> summand_dims;
};

namespace detail {

inline Mat default_form(const GroupFactor& f) {
    switch (f.pres) {
        case Pres::SL: return Mat();
        case Pres::SO: return antidiag_form(f.n);
        case Pres::SP: return symplectic_form(f.n);
        case Pres::G2: return g2_form();
    }
    return Mat();
}

inline std::vector<Mat> defining_basis(const GroupFactor& f, const Mat& form) {
    switch (f.pres) {
        case Pres::SL: return sl_basis(f.n);
        case Pres::SO: return so_basis(form);
        case Pres::SP: return sp_basis(form);
        case Pres::G2: return g2_basis();
    }
    return {};
}

// Functor for one factor slot of one summand.
inline SlotFunctor make_slot_functor(const GroupFactor& f, const Mat& form, const Weight& w,
                                     std::shared_ptr<SpinContext>& spin_ctx, int& out_dim) {
    if (is_trivial_weight(w)) {
        out_dim = 1;
        return [](const Mat&) { return Mat(1, 1); };
    }
    if (w == f.defining_weight()) {
        out_dim = f.n;
        return [](const Mat& X) { return X; };
    }
    const SimpleType t = f.type();
    auto is_fund = [&](int k) { return w == fundamental(t, k); };

    if (f.pres == Pres::SL) {
        if (w == dual_weight({t, f.defining_weight()}).weight) {
            out_dim = f.n;
            return [](const Mat& X) { return X.transpose() * Rat(-1); };
        }
        for (int k = 2; k < f.n; ++k)
            if (is_fund(k)) return lambda_functor(f.n, k, out_dim);
        if (f.n == 2) return sym2_functor(static_cast<int>(w[0]), out_dim);
    }
    if (f.pres == Pres::SP) {
        if (f.n == 2) return sym2_functor(static_cast<int>(w[0]), out_dim);
        if (is_fund(2)) return lambda20_functor(f.n, form, out_dim);
    }
    if (f.pres == Pres::SO && f.n > 4) {
        const int r = t.rank;
        if (t.family == Family::B) {
            for (int k = 2; k < r; ++k)
                if (is_fund(k)) return lambda_functor(f.n, k, out_dim);
            if (is_fund(r)) {
                if (!spin_ctx) spin_ctx = std::make_shared<SpinContext>(form);
                auto sc = spin_ctx;
                out_dim = 1 << sc->hb.pairs;
                return [sc](const Mat& X) { return sc->spin(X); };
            }
        } else {
            for (int k = 2; k <= r - 2; ++k)
                if (is_fund(k)) return lambda_functor(f.n, k, out_dim);
            if (is_fund(r) || is_fund(r - 1)) {
                if (!spin_ctx) spin_ctx = std::make_shared<SpinContext>(form);
                auto sc = spin_ctx;
                const bool even_part = is_fund(r);
                const int half = 1 << (sc->hb.pairs - 1);
                out_dim = half;
                // Index maps for the chosen parity.
                std::vector<int> pick;
                for (int m = 0; m < (1 << sc->hb.pairs); ++m)
                    if ((__builtin_popcount(m) % 2 == 0) == even_part) pick.push_back(m);
                return [sc, pick, half](const Mat& X) {
                    Mat full = sc->spin(X);
                    Mat out(half, half);
                    for (int i = 0; i < half; ++i)
                        for (int j = 0; j < half; ++j) out(i, j) = full(pick[i], pick[j]);
                    return out;
                };
            }
        }
    }
    throw OracleError("representation outside the constructive catalog: " + to_string(f) +
                      " with a non-catalog weight");
}

}  // namespace detail

// Builds the matrix realization of (g, v) using the given per-factor forms
// (empty entries mean the default split form).
inline MatrixRep rep_build_with_forms(const GroupSpec& g, const ModuleSpec& v,
                                      std::vector<Mat> forms, const OracleLimits& lim = {}) {
    validate_module(g, v);
    auto ctx = std::make_shared<RepContext>();
    ctx->g = g;
    ctx->v = v;
    ctx->forms.resize(g.factors.size());
    ctx->defining.resize(g.factors.size());
    ctx->spin.resize(g.factors.size());
    forms.resize(g.factors.size());
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        ctx->forms[i] = forms[i].rows() ? forms[i] : detail::default_form(g.factors[i]);
        ctx->defining[i] = detail::defining_basis(g.factors[i], ctx->forms[i]);
    }

    // Slot functors and dimensions.
    long total = 0;
    std::vector<std::vector<detail::SlotFunctor>> slot_f(v.summands.size());
    std::vector<std::vector<int>> slot_d(v.summands.size());
    for (std::size_t si = 0; si < v.summands.size(); ++si) {
        const auto& s = v.summands[si];
        long d = 1;
        for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
            int dim = 1;
            auto fn = detail::make_slot_functor(g.factors[fi], ctx->forms[fi], s.slots[fi],
                                                ctx->spin[fi], dim);
            slot_f[si].push_back(std::move(fn));
            slot_d[si].push_back(dim);
            d *= dim;
        }
        ctx->summand_dims.push_back(d);
        ctx->summand_offsets.push_back(total);
        total += d * s.mult;
    }
    if (total > lim.dim_cap)
        throw OracleError("module dimension " + std::to_string(total) +
                          " exceeds the cap of " + std::to_string(lim.dim_cap));

    // push(fi): X on the defining space of factor fi -> matrix on V.
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
        auto push = [ctx, slot_f, slot_d, fi, total](const Mat& X) {
            Mat out(total, total);
            for (std::size_t si = 0; si < ctx->v.summands.size(); ++si) {
                const auto& s = ctx->v.summands[si];
                if (!s.acts(fi)) continue;
                Mat img = slot_f[si][fi](X);
                // Kronecker placement: I (x) img (x) I within the summand.
                Mat placed = Mat::identity(1);
                for (std::size_t fj = 0; fj < ctx->g.factors.size(); ++fj) {
                    if (fj == fi)
                        placed = detail::kron(placed, img);
                    else
                        placed = detail::kron(placed, Mat::identity(slot_d[si][fj]));
                }
                long base = ctx->summand_offsets[si];
                for (long copy = 0; copy < s.mult; ++copy) {
                    long off = base + copy * ctx->summand_dims[si];
                    for (std::size_t a = 0; a < placed.rows(); ++a)
                        for (std::size_t b = 0; b < placed.cols(); ++b)
                            if (placed(a, b) != 0) out(off + a, off + b) = placed(a, b);
                }
            }
            return out;
        };
        ctx->push.push_back(push);
    }

    MatrixRep rep;
    rep.space_dim = static_cast<int>(total);
    rep.ctx = ctx;
    for (std::size_t fi = 0; fi < g.factors.size(); ++fi) {
        int begin = static_cast<int>(rep.gens.size());
        for (const Mat& X : ctx->defining[fi]) rep.gens.push_back(ctx->push[fi](X));
        rep.factor_gens.push_back({begin, static_cast<int>(rep.gens.size())});
    }
    for (int c = 0; c < g.torus_rank; ++c) {
        Mat t(total, total);
        for (std::size_t si = 0; si < v.summands.size(); ++si) {
            const auto& s = v.summands[si];
            if (s.charges[c] == 0) continue;
            long base = ctx->summand_offsets[si];
            long width = ctx->summand_dims[si] * s.mult;
            for (long a = 0; a < width; ++a) t(base + a, base + a) = s.charges[c];
        }
        rep.torus_gens.push_back(static_cast<int>(rep.gens.size()));
        rep.gens.push_back(std::move(t));
    }
    {
        EchelonBasis eb(static_cast<std::size_t>(total) * total);
        for (const Mat& m : rep.gens) eb.insert(flatten(m));
        rep.algebra_dim = static_cast<int>(eb.rank());
    }
    return rep;
}

inline MatrixRep rep_build(const GroupSpec& g, const ModuleSpec& v, const OracleLimits& lim = {}) {
    return rep_build_with_forms(g, v, {}, lim);
}

// --- Embeddings into a defining space ----------------------------------------

// Matrices of the embedded subalgebra inside the defining space of the target
// factor, together with the form the image preserves there (empty for SL
// targets).  The caller feeds the form back into rep_build_with_forms so that
// the G-side factor is realized compatibly.
struct DefiningEmbedding {
    Mat form;                         // target form adapted to the embedding
    std::vector<std::vector<Mat>> h;  // images of each h-factor's defining basis
};

inline DefiningEmbedding defining_embedding(const std::vector<GroupFactor>& h_factors,
                                            const GroupFactor& g_factor, EmbedKind kind,
                                            const std::vector<bool>& dual = {}) {
    auto dual_flag = [&](std::size_t i) { return i < dual.size() && dual[i]; };
    DefiningEmbedding out;
    switch (kind) {
        case EmbedKind::Id: {
            const GroupFactor& hf = h_factors[0];
            Mat form = detail::default_form(hf);
            out.form = form;
            auto basis = detail::defining_basis(hf, form);
            if (dual_flag(0))
                for (auto& X : basis) X = X.transpose() * Rat(-1);
            out.h.push_back(std::move(basis));
            return out;
        }
        case EmbedKind::DefiningSub: {
            const GroupFactor& hf = h_factors[0];
            Mat hform = detail::default_form(hf);
            auto basis = detail::defining_basis(hf, hform);
            if (dual_flag(0))
                for (auto& X : basis) X = X.transpose() * Rat(-1);
            // sp/so inside sl: target keeps no form; g2 inside so7 passes its own.
            out.form = g_factor.pres == Pres::SO ? hform : Mat();
            out.h.push_back(std::move(basis));
            return out;
        }
        case EmbedKind::VectorPad: {
            const GroupFactor& hf = h_factors[0];
            const int pad = g_factor.n - hf.n;
            Mat hform = detail::default_form(hf);
            if (g_factor.pres == Pres::SO) {
                Mat padform;
                if (pad % 2 == 0) {
                    padform = detail::antidiag_form(pad);
                } else {
                    padform = detail::antidiag_form(pad);
                    // Flip the middle so the two odd fixed points pair rationally.
                    if (hf.n % 2 == 1) padform(pad / 2, pad / 2) = -1;
                }
                out.form = detail::block_diag(hform, padform);
            } else {
                out.form = Mat();
            }
            std::vector<Mat> basis = detail::defining_basis(hf, hform);
            std::vector<Mat> padded;
            for (const Mat& Y : basis) {
                Mat X = dual_flag(0) ? Y.transpose() * Rat(-1) : Y;
                padded.push_back(detail::block_diag(X, Mat(pad, pad)));
            }
            out.h.push_back(std::move(padded));
            return out;
        }
        case EmbedKind::Spin: {
            const GroupFactor& hf = h_factors[0];
            Mat hform = detail::default_form(hf);
            detail::SpinContext sc(hform);
            const SimpleType ht = hf.type();
            std::vector<Mat> imgs;
            const bool half = ht.family == Family::D;
            std::vector<int> pick;
            if (half)
                for (int m = 0; m < (1 << sc.hb.pairs); ++m)
                    if (__builtin_popcount(m) % 2 == 0) pick.push_back(m);
            for (const Mat& Y : detail::defining_basis(hf, hform)) {
                Mat full = sc.spin(Y);
                if (!half) {
                    imgs.push_back(full);
                } else {
                    Mat m(pick.size(), pick.size());
                    for (std::size_t i = 0; i < pick.size(); ++i)
                        for (std::size_t j = 0; j < pick.size(); ++j)
                            m(i, j) = full(pick[i], pick[j]);
                    imgs.push_back(m);
                }
            }
            if (g_factor.pres == Pres::SO) {
                // The spinor form pairs opposite weights, i.e. complementary
                // index masks: B = sum_S u_S E_{S, ~S}.  Solve for u.
                const int d = g_factor.n;
                const unsigned full = static_cast<unsigned>(d - 1);
                auto comp = [full](int m) { return static_cast<int>(full ^ m); };
                EchelonBasis eqs(d);
                for (const Mat& X : imgs) {
                    for (int a = 0; a < d; ++a)
                        for (int b = 0; b < d; ++b) {
                            // (X^T B + B X)(a, b) = X(~b, a) u_{~b} + X(~a, b) u_a
                            Rat ca = X(comp(b), a), cb = X(comp(a), b);
                            if (ca == 0 && cb == 0) continue;
                            RatVec row(d);
                            row[comp(b)] += ca;
                            row[a] += cb;
                            eqs.insert(std::move(row));
                        }
                }
                auto kernel = eqs.kernel();
                if (kernel.size() != 1)
                    throw OracleError("spin embedding: invariant form not unique");
                Mat B(d, d);
                for (int a = 0; a < d; ++a) B(a, comp(a)) = kernel[0][a];
                if (!(B.transpose() == B)) throw OracleError("spin embedding: form not symmetric");
                for (const Mat& X : imgs) {
                    Mat z = X.transpose() * B + B * X;
                    if (!z.is_zero()) throw OracleError("spin embedding: form not invariant");
                }
                out.form = B;
            } else {
                out.form = Mat();
            }
            out.h.push_back(std::move(imgs));
            return out;
        }
        case EmbedKind::SplitSum: {
            const GroupFactor& hf = h_factors[0];
            const int m = hf.n;
            Mat B(2 * m, 2 * m);
            for (int i = 0; i < m; ++i) {
                B(i, m + i) = 1;
                B(m + i, i) = 1;
            }
            out.form = B;
            std::vector<Mat> imgs;
            for (const Mat& Y : detail::sl_basis(m)) {
                Mat X(2 * m, 2 * m);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) {
                        X(i, j) = Y(i, j);
                        X(m + i, m + j) = -Y(j, i);
                    }
                imgs.push_back(X);
            }
            out.h.push_back(std::move(imgs));
            return out;
        }
        case EmbedKind::TensorPair: {
            std::vector<Mat> slot_forms;
            std::vector<int> dims;
            for (const auto& hf : h_factors) {
                Mat f = detail::default_form(hf);
                // sl_2 = sp_2: its defining module carries the symplectic form.
                if (!f.rows() && hf.n == 2) f = detail::symplectic_form(2);
                slot_forms.push_back(std::move(f));
                dims.push_back(hf.n);
            }
            if (g_factor.pres == Pres::SO || g_factor.pres == Pres::SP) {
                Mat F = Mat::identity(1);
                for (std::size_t i = 0; i < h_factors.size(); ++i) {
                    if (!slot_forms[i].rows())
                        throw OracleError("tensor embedding into an orthogonal target "
                                          "needs forms on every slot");
                    F = detail::kron(F, slot_forms[i]);
                }
                out.form = F;
            } else {
                out.form = Mat();
            }
            for (std::size_t i = 0; i < h_factors.size(); ++i) {
                std::vector<Mat> imgs;
                for (const Mat& Y0 : detail::defining_basis(h_factors[i], slot_forms[i])) {
                    Mat Y = dual_flag(i) ? Y0.transpose() * Rat(-1) : Y0;
                    Mat X = Mat::identity(1);
                    for (std::size_t j = 0; j < h_factors.size(); ++j)
                        X = detail::kron(X, j == i ? Y : Mat::identity(dims[j]));
                    imgs.push_back(X);
                }
                out.h.push_back(std::move(imgs));
            }
            return out;
        }
        case EmbedKind::Lambda2: {
            const GroupFactor& hf = h_factors[0];
            int d = 0;
            auto lam = detail::lambda_functor(hf.n, 2, d);
            std::vector<Mat> imgs;
            for (const Mat& Y0 : detail::defining_basis(hf, Mat())) {
                Mat Y = dual_flag(0) ? Y0.transpose() * Rat(-1) : Y0;
                imgs.push_back(lam(Y));
            }
            out.form = Mat();
            out.h.push_back(std::move(imgs));
            return out;
        }
        case EmbedKind::Diag:
            throw OracleError("diagonal entries are realized at the summand level");
    }
    throw OracleError("unknown embedding kind");
}

// --- rep_build for a triple: G-rep with adapted forms, then the H image -------

inline MatrixRep rep_build_g(const TripleSpec& t, const OracleLimits& lim = {}) {
    validate(t);
    std::vector<Mat> forms(t.G.factors.size());
    for (const auto& e : t.emb.entries) {
        if (e.kind == EmbedKind::Id || e.kind == EmbedKind::Diag) continue;
        std::vector<GroupFactor> hs;
        for (int hi : e.h) hs.push_back(t.H.factors[hi]);
        auto de = defining_embedding(hs, t.G.factors[e.g[0]], e.kind, e.dual);
        if (de.form.rows()) forms[e.g[0]] = de.form;
    }
    return rep_build_with_forms(t.G, t.V, forms, lim);
}

// H's image acting on the same space as g_rep (which must come from
// rep_build_g on the same triple).
inline MatrixRep embed_h(const TripleSpec& t, const MatrixRep& g_rep) {
    const auto& ctx = *g_rep.ctx;
    MatrixRep rep;
    rep.space_dim = g_rep.space_dim;
    rep.ctx = g_rep.ctx;
    for (std::size_t hi = 0; hi < t.H.factors.size(); ++hi) {
        const EmbedEntry* entry = nullptr;
        std::size_t slot = 0;
        for (const auto& e : t.emb.entries)
            for (std::size_t k = 0; k < e.h.size(); ++k)
                if (e.h[k] == static_cast<int>(hi)) {
                    entry = &e;
                    slot = k;
                }
        if (!entry) throw OracleError("H factor without embedding entry");
        int begin = static_cast<int>(rep.gens.size());
        if (entry->kind == EmbedKind::Id) {
            bool dual = !entry->dual.empty() && entry->dual[0];
            for (const Mat& X : ctx.defining[entry->g[0]])
                rep.gens.push_back(ctx.push[entry->g[0]](dual ? X.transpose() * Rat(-1) : X));
        } else if (entry->kind == EmbedKind::Diag) {
            for (const Mat& X : ctx.defining[entry->g[0]]) {
                Mat a = ctx.push[entry->g[0]](X);
                Mat b = ctx.push[entry->g[1]](X);
                rep.gens.push_back(a + b);
            }
        } else {
            std::vector<GroupFactor> hs;
            for (int x : entry->h) hs.push_back(t.H.factors[x]);
            auto de = defining_embedding(hs, t.G.factors[entry->g[0]], entry->kind, entry->dual);
            for (const Mat& X : de.h[slot]) rep.gens.push_back(ctx.push[entry->g[0]](X));
        }
        rep.factor_gens.push_back({begin, static_cast<int>(rep.gens.size())});
    }
    // H-torus through the torus map.
    for (int k = 0; k < t.H.torus_rank; ++k) {
        Mat m(rep.space_dim, rep.space_dim);
        for (int c = 0; c < t.G.torus_rank; ++c) {
            if (t.emb.torus_map[k][c] == 0) continue;
            m = m + g_rep.gens[g_rep.torus_gens[c]] * Rat(t.emb.torus_map[k][c]);
        }
        rep.torus_gens.push_back(static_cast<int>(rep.gens.size()));
        rep.gens.push_back(std::move(m));
    }
    EchelonBasis eb(static_cast<std::size_t>(rep.space_dim) * rep.space_dim);
    for (const Mat& m : rep.gens) eb.insert(flatten(m));
    rep.algebra_dim = static_cast<int>(eb.rank());
    return rep;
}

// --- Orbits and stabilizers ---------------------------------------------------

inline int orbit_dim(const MatrixRep& r, const RatVec& v) {
    if (static_cast<int>(v.size()) != r.space_dim) throw OracleError("orbit_dim: wrong vector size");
    Mat rows(r.gens.size(), r.space_dim);
    for (std::size_t k = 0; k < r.gens.size(); ++k) {
        RatVec xv = r.gens[k].apply(v);
        for (int j = 0; j < r.space_dim; ++j) rows(k, j) = xv[j];
    }
    return static_cast<int>(rank(rows));
}

inline RatVec random_vector(int dim, std::mt19937_64& rng) {
    RatVec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = static_cast<long>(rng() % 19) - 9;
    return v;
}

inline int generic_orbit_dim(const MatrixRep& r, std::uint64_t seed, int samples = 3) {
    std::mt19937_64 rng(seed);
    int best = 0;
    for (int s = 0; s < samples; ++s) {
        RatVec v = random_vector(r.space_dim, rng);
        best = std::max(best, orbit_dim(r, v));
    }
    return best;
}

// Basis of the stabilizer subalgebra at v, as coefficient vectors over gens.
inline std::vector<RatVec> stabilizer_coeffs(const MatrixRep& r, const RatVec& v) {
    Mat sys(r.space_dim, r.gens.size());
    for (std::size_t k = 0; k < r.gens.size(); ++k) {
        RatVec xv = r.gens[k].apply(v);
        for (int i = 0; i < r.space_dim; ++i) sys(i, k) = xv[i];
    }
    return nullspace(sys);
}

inline std::vector<Mat> stabilizer_basis(const MatrixRep& r, const RatVec& v) {
    std::vector<Mat> out;
    for (const auto& c : stabilizer_coeffs(r, v)) {
        Mat m(r.space_dim, r.space_dim);
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) m = m + r.gens[k] * c[k];
        out.push_back(std::move(m));
    }
    return out;
}

// Dimension of the coordinate projection of the stabilizer onto the selected
// factor's generators.  Assumes that factor acts faithfully on the space.
inline int projection_dim(const std::vector<RatVec>& stab_coeffs, int begin, int end) {
    if (stab_coeffs.empty()) return 0;
    Mat m(stab_coeffs.size(), end - begin);
    for (std::size_t i = 0; i < stab_coeffs.size(); ++i)
        for (int j = begin; j < end; ++j) m(i, j - begin) = stab_coeffs[i][j];
    return static_cast<int>(rank(m));
}

// --- Invariant bilinear forms ---------------------------------------------------

// Basis of { B : X^T B + B X = 0 for every generator }.  Dense in d^2
// unknowns; meant for small modules.
inline std::vector<Mat> invariant_bilinear_forms(const std::vector<Mat>& gens, int d) {
    EchelonBasis eqs(static_cast<std::size_t>(d) * d);
    for (const Mat& X : gens) {
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                RatVec row(static_cast<std::size_t>(d) * d);
                bool nz = false;
                for (int c = 0; c < d; ++c) {
                    if (X(c, a) != 0) {
                        row[static_cast<std::size_t>(c) * d + b] += X(c, a);
                        nz = true;
                    }
                    if (X(c, b) != 0) {
                        row[static_cast<std::size_t>(a) * d + c] += X(c, b);
                        nz = true;
                    }
                }
                if (nz) eqs.insert(std::move(row));
            }
    }
    std::vector<Mat> out;
    for (const auto& v : eqs.kernel()) {
        Mat B(d, d);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) B(a, b) = v[static_cast<std::size_t>(a) * d + b];
        out.push_back(std::move(B));
    }
    return out;
}

// Same, but restricted to the entries pairing opposite weight vectors, read
// off the diagonal generators.  Sound for weight-basis realizations (all the
// catalog builds except g2); entries outside the pattern vanish on invariant
// forms because they pair non-opposite weights.
inline std::vector<Mat> invariant_bilinear_forms_weighted(const std::vector<Mat>& gens, int d) {
    std::vector<const Mat*> cartan;
    for (const Mat& g : gens) {
        bool diag = true;
        for (int i = 0; i < d && diag; ++i)
            for (int j = 0; j < d && diag; ++j)
                if (i != j && g(i, j) != 0) diag = false;
        if (diag && !g.is_zero()) cartan.push_back(&g);
    }
    if (cartan.empty()) return invariant_bilinear_forms(gens, d);
    std::vector<std::vector<Rat>> wt(d);
    for (int a = 0; a < d; ++a)
        for (const Mat* h : cartan) wt[a].push_back((*h)(a, a));
    std::map<std::pair<int, int>, int> pat;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            bool opp = true;
            for (std::size_t k = 0; k < wt[a].size() && opp; ++k)
                if (wt[a][k] + wt[b][k] != 0) opp = false;
            if (opp) {
                pat[{a, b}] = static_cast<int>(pairs.size());
                pairs.push_back({a, b});
            }
        }
    EchelonBasis eqs(pairs.size());
    for (const Mat& X : gens) {
        std::map<std::pair<int, int>, RatVec> rows;
        for (int c = 0; c < d; ++c)
            for (int a = 0; a < d; ++a) {
                if (X(c, a) == 0) continue;
                // contributes X(c,a) * B(c,b) to equation (a,b)
                for (int b = 0; b < d; ++b) {
                    auto it = pat.find({c, b});
                    if (it == pat.end()) continue;
                    auto& row = rows.try_emplace({a, b}, RatVec(pairs.size())).first->second;
                    row[it->second] += X(c, a);
                }
                // contributes X(c,a) * B(b,c) to equation (b,a)
                for (int b = 0; b < d; ++b) {
                    auto it = pat.find({b, c});
                    if (it == pat.end()) continue;
                    auto& row = rows.try_emplace({b, a}, RatVec(pairs.size())).first->second;
                    row[it->second] += X(c, a);
                }
            }
        for (auto& [key, row] : rows) eqs.insert(std::move(row));
    }
    std::vector<Mat> out;
    for (const auto& v : eqs.kernel()) {
        Mat B(d, d);
        for (std::size_t k = 0; k < pairs.size(); ++k) B(pairs[k].first, pairs[k].second) = v[k];
        out.push_back(std::move(B));
    }
    return out;
}

// --- Verdicts -----------------------------------------------------------------

struct OracleVerdict {
    int g_orbit_dim = 0;
    int h_orbit_dim = 0;
    int codim = 0;  // dim V - g_orbit_dim; equals nu when exceptional
    bool exceptional = false;
    std::uint64_t seed = 0;
    int samples = 0;
};

inline OracleVerdict is_exceptional_oracle(const TripleSpec& t, std::uint64_t seed = 1,
                                           int samples = 3, const OracleLimits& lim = {}) {
    MatrixRep g = rep_build_g(t, lim);
    MatrixRep h = embed_h(t, g);
    std::mt19937_64 rng(seed);
    OracleVerdict out;
    out.seed = seed;
    out.samples = samples;
    for (int s = 0; s < samples; ++s) {
        RatVec v = random_vector(g.space_dim, rng);
        out.g_orbit_dim = std::max(out.g_orbit_dim, orbit_dim(g, v));
        out.h_orbit_dim = std::max(out.h_orbit_dim, orbit_dim(h, v));
    }
    out.codim = g.space_dim - out.g_orbit_dim;
    out.exceptional = out.g_orbit_dim == out.h_orbit_dim;
    return out;
}

// Proposition-reduc condition (ii): the torus directions (given as one
// per-summand charge vector each) add no generic orbit dimension over the
// semisimple part g_prime acting on v.
inline bool torus_triviality_check(const GroupSpec& g_prime, const ModuleSpec& v,
                                   const std::vector<std::vector<long>>& summand_charges,
                                   std::uint64_t seed = 1, int samples = 3,
                                   const OracleLimits& lim = {}) {
    if (summand_charges.empty()) return true;
    MatrixRep base = rep_build(g_prime, v, lim);
    MatrixRep ext = base;
    for (const auto& charges : summand_charges) {
        if (charges.size() != v.summands.size())
            throw OracleError("torus_triviality_check: charge vector length mismatch");
        Mat m(base.space_dim, base.space_dim);
        for (std::size_t si = 0; si < v.summands.size(); ++si) {
            if (charges[si] == 0) continue;
            long off = base.ctx->summand_offsets[si];
            long width = base.ctx->summand_dims[si] * v.summands[si].mult;
            for (long a = 0; a < width; ++a) m(off + a, off + a) = charges[si];
        }
        ext.gens.push_back(std::move(m));
    }
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        RatVec v0 = random_vector(base.space_dim, rng);
        if (orbit_dim(base, v0) != orbit_dim(ext, v0)) return false;
    }
    return true;
}

// --- Validation ----------------------------------------------------------------

// Full functor-level checks: generator independence, bracket closure of the
// image span, invariant-form preservation on defining spaces, and containment
// of the H image inside the G image.
inline void validate_rep(const MatrixRep& r) {
    EchelonBasis span(static_cast<std::size_t>(r.space_dim) * r.space_dim);
    for (const Mat& m : r.gens) span.insert(flatten(m));
    for (std::size_t i = 0; i < r.gens.size(); ++i)
        for (std::size_t j = i + 1; j < r.gens.size(); ++j) {
            Mat br = Mat::bracket(r.gens[i], r.gens[j]);
            if (!span.contains(flatten(br)))
                throw OracleError("bracket closure fails at generators " + std::to_string(i) +
                                  ", " + std::to_string(j));
        }
}

inline void validate_forms(const MatrixRep& r) {
    const auto& ctx = *r.ctx;
    for (std::size_t fi = 0; fi < ctx.g.factors.size(); ++fi) {
        if (!ctx.forms[fi].rows()) continue;
        for (const Mat& X : ctx.defining[fi]) {
            Mat z = X.transpose() * ctx.forms[fi] + ctx.forms[fi] * X;
            if (!z.is_zero()) throw OracleError("defining form not preserved");
        }
    }
}

inline bool h_inside_g(const MatrixRep& h, const MatrixRep& g) {
    EchelonBasis span(static_cast<std::size_t>(g.space_dim) * g.space_dim);
    for (const Mat& m : g.gens) span.insert(flatten(m));
    for (const Mat& m : h.gens)
        if (!span.contains(flatten(m))) return false;
    return true;
}

}  // namespace orthex
