#pragma once

#include <optional>
#include <vector>

#include "calogero/errors.hpp"
#include "calogero/nupoly.hpp"

namespace calogero {

// Dense row-major matrix over an exact coefficient type.
template <class K>
struct Mat {
    unsigned rows = 0, cols = 0;
    std::vector<K> a;

    Mat() = default;
    Mat(unsigned r, unsigned c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, K(0)) {}

    K& at(unsigned i, unsigned j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const K& at(unsigned i, unsigned j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(unsigned n) {
        Mat m(n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <class K>
Mat<K> mat_mul(const Mat<K>& x, const Mat<K>& y) {
    Mat<K> out(x.rows, y.cols);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned k = 0; k < x.cols; ++k) {
            const K& v = x.at(i, k);
            if (v == K(0)) continue;
            for (unsigned j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
        }
    return out;
}

template <class K>
Mat<K> mat_sub(const Mat<K>& x, const Mat<K>& y) {
    Mat<K> out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] -= y.a[i];
    return out;
}

template <class K>
Mat<K> transpose(const Mat<K>& x) {
    Mat<K> out(x.cols, x.rows);
    for (unsigned i = 0; i < x.rows; ++i)
        for (unsigned j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

template <class K>
std::vector<K> mat_apply(const Mat<K>& m, const std::vector<K>& v) {
    std::vector<K> out(m.rows, K(0));
    for (unsigned i = 0; i < m.rows; ++i)
        for (unsigned j = 0; j < m.cols; ++j)
            if (!(m.at(i, j) == K(0))) out[i] += m.at(i, j) * v[j];
    return out;
}

// In-place reduction to row echelon form over a field. Returns the rank and
// fills pivot_cols with the pivot column of each nonzero row.
template <class K>
unsigned row_echelon(Mat<K>& m, std::vector<unsigned>* pivot_cols = nullptr) {
    unsigned rank = 0;
    if (pivot_cols) pivot_cols->clear();
    for (unsigned col = 0; col < m.cols && rank < m.rows; ++col) {
        unsigned piv = rank;
        while (piv < m.rows && m.at(piv, col) == K(0)) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (unsigned j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        K inv = K(1) / m.at(rank, col);
        for (unsigned j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * inv;
        for (unsigned i = 0; i < m.rows; ++i) {
            if (i == rank) continue;
            const K& f = m.at(i, col);
            if (f == K(0)) continue;
            K fc = f;
            for (unsigned j = col; j < m.cols; ++j) m.at(i, j) -= fc * m.at(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

template <class K>
unsigned rank(Mat<K> m) {
    return row_echelon(m);
}

// Basis of the right kernel {x : m x = 0}.
template <class K>
std::vector<std::vector<K>> kernel_basis(Mat<K> m) {
    std::vector<unsigned> piv;
    row_echelon(m, &piv);
    std::vector<bool> is_piv(m.cols, false);
    for (unsigned c : piv) is_piv[c] = true;
    std::vector<std::vector<K>> basis;
    for (unsigned freec = 0; freec < m.cols; ++freec) {
        if (is_piv[freec]) continue;
        std::vector<K> v(m.cols, K(0));
        v[freec] = K(1);
        for (unsigned r = 0; r < piv.size(); ++r) v[piv[r]] = -m.at(r, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
    if (m.rows != m.cols) return std::nullopt;
    Mat<K> aug(m.rows, 2 * m.cols);
    for (unsigned i = 0; i < m.rows; ++i) {
        for (unsigned j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = K(1);
    }
    std::vector<unsigned> pivots;
    row_echelon(aug, &pivots);
    // m is invertible iff every pivot lands in the left block
    for (unsigned p : pivots)
        if (p >= m.cols) return std::nullopt;
    if (pivots.size() != m.rows) return std::nullopt;
    Mat<K> out(m.rows, m.cols);
    for (unsigned i = 0; i < m.rows; ++i)
        for (unsigned j = 0; j < m.cols; ++j) out.at(i, j) = aug.at(i, m.cols + j);
    return out;
}

// Exact linear solver for a fixed matrix with full column rank: factors once,
// then answers solve(rhs) queries. Returns nullopt when rhs is inconsistent.
template <class K>
class LinSolver {
public:
    explicit LinSolver(const Mat<K>& m) : m_(m), aug_(m.rows, m.cols + m.rows) {
        for (unsigned i = 0; i < m.rows; ++i) {
            for (unsigned j = 0; j < m.cols; ++j) aug_.at(i, j) = m.at(i, j);
            aug_.at(i, m.cols + i) = K(1);
        }
        rank_ = row_echelon(aug_, &piv_);
    }

    // Solves m x = rhs exactly.
    std::optional<std::vector<K>> solve(const std::vector<K>& rhs) const {
        // aug_ rows encode: (reduced m | T) with T m = reduced m; the solution
        // reads off pivot rows applied to T rhs, consistency from null rows.
        std::vector<K> t(m_.rows, K(0));
        for (unsigned i = 0; i < m_.rows; ++i)
            for (unsigned k = 0; k < m_.rows; ++k)
                if (!(aug_.at(i, m_.cols + k) == K(0))) t[i] += aug_.at(i, m_.cols + k) * rhs[k];
        std::vector<K> x(m_.cols, K(0));
        unsigned r = 0;
        for (; r < piv_.size() && piv_[r] < m_.cols; ++r) x[piv_[r]] = t[r];
        // Rows beyond the column rank must have zero transformed rhs.
        for (unsigned i = rank_; i < m_.rows; ++i)
            if (!(t[i] == K(0))) return std::nullopt;
        // Verify rows whose pivot landed in the T block (rank deficiency in m).
        for (unsigned i = 0; i < rank_; ++i) {
            if (piv_[i] < m_.cols) continue;
            if (!(t[i] == K(0))) return std::nullopt;
        }
        return x;
    }

    unsigned column_rank() const {
        unsigned r = 0;
        for (unsigned c : piv_)
            if (c < m_.cols) ++r;
        return r;
    }

private:
    Mat<K> m_;
    Mat<K> aug_;
    std::vector<unsigned> piv_;
    unsigned rank_ = 0;
};

// Fraction-free (Bareiss) rank over an integral domain with exact division.
// Used for symbolic nu-polynomial matrices.
unsigned bareiss_rank(Mat<NuPoly> m);

}  // namespace calogero
