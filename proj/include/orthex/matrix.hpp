#pragma once

// Dense matrices over exact rationals (GMP), with the fraction-free and
// row-reduction routines the rest of the library builds on.  No floating
// point anywhere: ranks and kernels are exact.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace orthex {

using Rat = mpq_class;
using Big = mpz_class;
using RatVec = std::vector<Rat>;

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return a_[i * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    c(i, j) += x * b(k, j);
                }
            }
        return c;
    }

    Mat operator+(const Mat& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("Mat: shape mismatch in sum");
        Mat c(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] + b.a_[i];
        return c;
    }

    Mat operator-(const Mat& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw std::invalid_argument("Mat: shape mismatch in difference");
        Mat c(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] - b.a_[i];
        return c;
    }

    Mat operator*(const Rat& s) const {
        Mat c(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] = a_[i] * s;
        return c;
    }

    RatVec apply(const RatVec& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Mat: shape mismatch in apply");
        RatVec r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    // Lie bracket [A, B] = AB - BA.
    static Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

private:
    std::size_t rows_, cols_;
    RatVec a_;
};

// Rank by fraction-free (Bareiss) elimination.  Rows are first scaled to a
// common integer denominator; row scaling does not change the rank.
inline std::size_t rank(const Mat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0) return 0;
    std::vector<std::vector<Big>> a(nr, std::vector<Big>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Big den = 1;
        for (std::size_t j = 0; j < nc; ++j) den = lcm(den, m(i, j).get_den());
        for (std::size_t j = 0; j < nc; ++j) {
            Rat x = m(i, j) * Rat(den);
            x.canonicalize();
            a[i][j] = x.get_num();
        }
    }
    std::size_t r = 0;
    Big prev = 1;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                Big t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                // Exact division step of Bareiss elimination.
                a[i][j] = t / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Basis of the right null space { x : m x = 0 }, one column vector per row
// of the result.
inline std::vector<RatVec> nullspace(const Mat& m) {
    Mat e = m;
    std::vector<std::size_t> piv = rref(e);
    std::vector<bool> is_piv(m.cols(), false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_piv[c]) continue;
        RatVec v(m.cols());
        v[c] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -e(k, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Incrementally maintained row space in reduced echelon form.  Used where
// equations arrive one at a time and only the final rank or a kernel of
// moderate width matters.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t width) : width_(width) {}

    // Reduces v against the basis; inserts the remainder if nonzero.
    // Returns true when the row enlarged the span.
    bool insert(RatVec v) {
        reduce(v);
        std::size_t lead = width_;
        for (std::size_t j = 0; j < width_; ++j)
            if (v[j] != 0) { lead = j; break; }
        if (lead == width_) return false;
        Rat inv = 1 / v[lead];
        for (std::size_t j = lead; j < width_; ++j) v[j] *= inv;
        for (auto& row : rows_) {
            if (row.v[lead] == 0) continue;
            Rat f = row.v[lead];
            for (std::size_t j = lead; j < width_; ++j) row.v[j] -= f * v[j];
        }
        rows_.push_back({lead, std::move(v)});
        return true;
    }

    void reduce(RatVec& v) const {
        for (const auto& row : rows_) {
            if (v[row.lead] == 0) continue;
            Rat f = v[row.lead];
            for (std::size_t j = row.lead; j < width_; ++j) v[j] -= f * row.v[j];
        }
    }

    bool contains(RatVec v) const {
        reduce(v);
        for (const Rat& x : v)
            if (x != 0) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

    // Nullspace of the accumulated row span, after back-reduction.
    std::vector<RatVec> kernel() {
        std::sort(rows_.begin(), rows_.end(),
                  [](const Row& a, const Row& b) { return a.lead < b.lead; });
        for (std::size_t i = rows_.size(); i-- > 0;) {
            for (std::size_t k = 0; k < i; ++k) {
                Rat f = rows_[k].v[rows_[i].lead];
                if (f == 0) continue;
                for (std::size_t j = rows_[i].lead; j < width_; ++j)
                    rows_[k].v[j] -= f * rows_[i].v[j];
            }
        }
        std::vector<bool> is_piv(width_, false);
        for (const auto& r : rows_) is_piv[r.lead] = true;
        std::vector<RatVec> basis;
        for (std::size_t c = 0; c < width_; ++c) {
            if (is_piv[c]) continue;
            RatVec v(width_);
            v[c] = 1;
            for (std::size_t k = 0; k < rows_.size(); ++k) v[rows_[k].lead] = -rows_[k].v[c];
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    struct Row {
        std::size_t lead;
        RatVec v;
    };
    std::size_t width_;
    std::vector<Row> rows_;
};

inline RatVec flatten(const Mat& m) {
    RatVec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

// Rank of the span of a list of equally sized matrices.
inline std::size_t span_rank(const std::vector<Mat>& ms) {
    if (ms.empty()) return 0;
    EchelonBasis eb(ms[0].rows() * ms[0].cols());
    for (const Mat& m : ms) eb.insert(flatten(m));
    return eb.rank();
}

}  // namespace orthex
