#pragma once

// Root-system and highest-weight arithmetic for the simple types A..G:
// irrep dimensions (Weyl formula over exact integers), dual weights, and
// the symmetry type of the invariant bilinear form.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "orthex/matrix.hpp"

namespace orthex {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
    Family family = Family::A;
    int rank = 1;

    bool operator==(const SimpleType&) const = default;
    auto operator<=>(const SimpleType&) const = default;
};

inline bool valid(const SimpleType& t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 2;
        case Family::D: return t.rank >= 3;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

inline std::string to_string(const SimpleType& t) {
    return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

// Dimension of the adjoint (number of roots plus rank).
inline int algebra_dim(const SimpleType& t) {
    const int r = t.rank;
    switch (t.family) {
        case Family::A: return r * (r + 2);
        case Family::B:
        case Family::C: return r * (2 * r + 1);
        case Family::D: return r * (2 * r - 1);
        case Family::E: return r == 6 ? 78 : (r == 7 ? 133 : 248);
        case Family::F: return 52;
        case Family::G: return 14;
    }
    return 0;
}

using Weight = std::vector<long>;

struct Irrep {
    SimpleType algebra;
    Weight weight;

    bool operator==(const Irrep&) const = default;
    auto operator<=>(const Irrep&) const = default;
};

inline bool valid(const Irrep& r) {
    if (!valid(r.algebra)) return false;
    if (static_cast<int>(r.weight.size()) != r.algebra.rank) return false;
    return std::all_of(r.weight.begin(), r.weight.end(), [](long w) { return w >= 0; });
}

inline Weight fundamental(const SimpleType& t, int k) {
    if (k < 1 || k > t.rank) throw std::invalid_argument("fundamental weight index out of range");
    Weight w(t.rank, 0);
    w[k - 1] = 1;
    return w;
}

inline bool is_trivial_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long x) { return x == 0; });
}

namespace detail {

// Cartan data in Bourbaki numbering.  cartan[i][j] = <alpha_j, alpha_i^vee>
// and d[i] = (alpha_i, alpha_i)/2 scaled so that short roots have d = 1.
struct RootData {
    std::vector<std::vector<int>> cartan;
    std::vector<int> d;
    std::vector<std::vector<int>> positive_roots;  // coefficients over simple roots
};

inline std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
    const int r = t.rank;
    std::vector<std::vector<int>> c(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            break;
        case Family::B:
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            c[r - 1][r - 2] = -2;  // <alpha_{r-1}, alpha_r^vee>, alpha_r short
            break;
        case Family::C:
            for (int i = 0; i + 1 < r; ++i) link(i, i + 1);
            c[r - 2][r - 1] = -2;
            break;
        case Family::D:
            for (int i = 0; i + 1 < r - 1; ++i) link(i, i + 1);
            link(r - 3, r - 1);
            break;
        case Family::E:
            // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-6(-7-8).
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            if (r >= 7) link(5, 6);
            if (r == 8) link(6, 7);
            link(1, 3);
            break;
        case Family::F:
            link(0, 1);
            link(2, 3);
            c[2][1] = -2;
            c[1][2] = -1;
            break;
        case Family::G:
            // alpha_1 short: phi_1 is the 7-dimensional representation.
            c[0][1] = -3;
            c[1][0] = -1;
            break;
    }
    return c;
}

inline std::vector<int> root_lengths(const SimpleType& t) {
    const int r = t.rank;
    std::vector<int> d(r, 1);
    switch (t.family) {
        case Family::B:
            for (int i = 0; i + 1 < r; ++i) d[i] = 2;
            break;
        case Family::C:
            d[r - 1] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default:
            break;
    }
    return d;
}

inline const RootData& root_data(const SimpleType& t) {
    static std::map<SimpleType, RootData> cache;
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;

    RootData rd;
    rd.cartan = cartan_matrix(t);
    rd.d = root_lengths(t);
    const int r = t.rank;

    // Standard closure: beta + alpha_i is a root iff p - <beta, alpha_i^vee> >= 1,
    // where p is the length of the descending alpha_i-string through beta.
    std::vector<std::vector<int>> roots;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < r; ++i) {
        std::vector<int> a(r, 0);
        a[i] = 1;
        index[a] = static_cast<int>(roots.size());
        roots.push_back(a);
    }
    for (std::size_t k = 0; k < roots.size(); ++k) {
        std::vector<int> beta = roots[k];
        for (int i = 0; i < r; ++i) {
            int pairing = 0;
            for (int j = 0; j < r; ++j) pairing += beta[j] * rd.cartan[i][j];
            int p = 0;
            std::vector<int> down = beta;
            while (true) {
                down[i] -= 1;
                bool nonneg = std::all_of(down.begin(), down.end(), [](int x) { return x >= 0; });
                if (!nonneg || !index.count(down)) break;
                ++p;
            }
            if (p - pairing >= 1) {
                std::vector<int> up = beta;
                up[i] += 1;
                if (!index.count(up)) {
                    index[up] = static_cast<int>(roots.size());
                    roots.push_back(up);
                }
            }
        }
    }
    rd.positive_roots = std::move(roots);
    return cache.emplace(t, std::move(rd)).first->second;
}

}  // namespace detail

// Weyl dimension formula, evaluated as an exact integer.
inline Big dim_irrep(const Irrep& rep) {
    if (!valid(rep)) throw std::invalid_argument("dim_irrep: invalid irrep");
    const auto& rd = detail::root_data(rep.algebra);
    Big num = 1, den = 1;
    for (const auto& alpha : rd.positive_roots) {
        long n = 0, m = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            const long cd = static_cast<long>(alpha[j]) * rd.d[j];
            n += (rep.weight[j] + 1) * cd;
            m += cd;
        }
        num *= n;
        den *= m;
    }
    Big q = num / den;
    return q;
}

// Highest weight of the dual representation (-w0 action).
inline Irrep dual_weight(const Irrep& rep) {
    if (!valid(rep)) throw std::invalid_argument("dual_weight: invalid irrep");
    Irrep out = rep;
    const int r = rep.algebra.rank;
    switch (rep.algebra.family) {
        case Family::A:
            std::reverse(out.weight.begin(), out.weight.end());
            break;
        case Family::D:
            if (r % 2 == 1) std::swap(out.weight[r - 2], out.weight[r - 1]);
            break;
        case Family::E:
            if (r == 6) {
                std::swap(out.weight[0], out.weight[5]);
                std::swap(out.weight[2], out.weight[4]);
            }
            break;
        default:
            break;  // B, C, E7, E8, F, G: -w0 = id
    }
    return out;
}

enum class FormType { orthogonal, symplectic, complex };

inline std::string to_string(FormType f) {
    switch (f) {
        case FormType::orthogonal: return "orthogonal";
        case FormType::symplectic: return "symplectic";
        case FormType::complex: return "complex";
    }
    return "?";
}

// Symmetry type of the invariant bilinear form: complex when not self-dual,
// otherwise decided by the parity of <lambda, 2 rho^vee> (Frobenius-Schur).
inline FormType form_type(const Irrep& rep) {
    if (dual_weight(rep) != rep) return FormType::complex;
    const auto& rd = detail::root_data(rep.algebra);
    long parity = 0;
    for (const auto& alpha : rd.positive_roots) {
        long num = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            num += rep.weight[j] * static_cast<long>(alpha[j]) * rd.d[j];
        // d_alpha = (alpha, alpha)/2, with (alpha_j, alpha_k) = d_k * cartan[k][j];
        // then <lambda, alpha^vee> = (sum_j m_j c_j d_j) / d_alpha.
        long s = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j)
            for (std::size_t k = 0; k < alpha.size(); ++k)
                s += static_cast<long>(alpha[j]) * alpha[k] * rd.d[k] * rd.cartan[k][j];
        const long da = s / 2;
        if (num % da != 0) throw std::logic_error("form_type: non-integral pairing");
        parity += num / da;
    }
    return (parity % 2 != 0) ? FormType::symplectic : FormType::orthogonal;
}

}  // namespace orthex
