#ifndef JK_LINALG_HPP
#define JK_LINALG_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "jk/errors.hpp"
#include "jk/matrix.hpp"

namespace jk {

/*
 * Exact linear algebra over a field K (Gauss elimination with pivot
 * normalization). Everything here is a pure function of its inputs.
 */

template <class K>
struct RankNullspace {
    std::size_t rank = 0;
    std::vector<std::vector<K>> nullspace;  // basis of the right kernel
};

// Row echelon form in place; returns pivot columns.
template <class K>
std::vector<std::size_t> row_echelon(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == K(0)) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        const K inv = K(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == K(0)) continue;
            const K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
RankNullspace<K> rank_nullspace(Matrix<K> m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = row_echelon(m);
    RankNullspace<K> result;
    result.rank = pivots.size();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<K> v(n, K(0));
        v[free_col] = K(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
        result.nullspace.push_back(std::move(v));
    }
    return result;
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
    Matrix<K> copy = m;
    return row_echelon(copy).size();
}

template <class K>
K determinant(Matrix<K> m) {
    if (!m.is_square()) throw domain_error("determinant: matrix not square");
    K det(1);
    const std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pr = col;
        while (pr < n && m(pr, col) == K(0)) ++pr;
        if (pr == n) return K(0);
        if (pr != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const K inv = K(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == K(0)) continue;
            const K f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    if (!m.is_square()) throw domain_error("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K(1);
    }
    row_echelon(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (!(aug(i, i) == K(1))) return std::nullopt;
    Matrix<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/*
 * Pfaffian of an even-dimensional skew-symmetric matrix by skew Gaussian
 * elimination (congruence by elementary transvections), O(n^3) field
 * operations. Odd dimension returns 0 by convention.
 */
template <class K>
K pfaffian(Matrix<K> m) {
    if (!m.is_square()) throw domain_error("pfaffian: matrix not square");
    if (!m.is_skew_symmetric()) throw domain_error("pfaffian: matrix not skew-symmetric");
    const std::size_t n = m.rows();
    if (n == 0) return K(1);
    if (n % 2 == 1) return K(0);
    K result(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t piv = k + 1;
        while (piv < n && m(k, piv) == K(0)) ++piv;
        if (piv == n) return K(0);
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(piv, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, piv));
            result = -result;
        }
        const K element = m(k, k + 1);
        result *= element;
        if (k + 2 >= n) break;
        const K inv = K(1) / element;
        std::vector<K> tau(n, K(0));
        for (std::size_t i = k + 2; i < n; ++i) tau[i] = m(k, i) * inv;
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = k + 2; j < n; ++j) {
                m(i, j) += tau[i] * m(j, k + 1) - tau[j] * m(i, k + 1);
            }
        }
        // Row/column k+1 entries beyond the pivot pair also vanish under the
        // same congruence; they are never read again, so they stay stale.
    }
    return result;
}

// Congruence transform Q^T M Q.
template <class K>
Matrix<K> congruence(const Matrix<K>& q, const Matrix<K>& m) {
    return q.transpose() * m * q;
}

/*
 * Incremental span of vectors in K^n, kept in reduced echelon form. Used to
 * saturate sums of kernels.
 */
template <class K>
class SpanBasis {
  public:
    explicit SpanBasis(std::size_t n) : n_(n) {}

    // Returns true if the vector enlarged the span.
    bool add(std::vector<K> v) {
        if (v.size() != n_) throw domain_error("SpanBasis: wrong vector length");
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const K& c = v[pivot_[b]];
            if (!(c == K(0))) {
                const K f = c;
                for (std::size_t j = 0; j < n_; ++j) v[j] -= f * basis_[b][j];
            }
        }
        std::size_t p = 0;
        while (p < n_ && v[p] == K(0)) ++p;
        if (p == n_) return false;
        const K inv = K(1) / v[p];
        for (auto& c : v) c *= inv;
        // reduce existing rows against the new one
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const K f = basis_[b][p];
            if (!(f == K(0)))
                for (std::size_t j = 0; j < n_; ++j) basis_[b][j] -= f * v[j];
        }
        basis_.push_back(std::move(v));
        pivot_.push_back(p);
        return true;
    }

    bool contains(std::vector<K> v) const {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const K f = v[pivot_[b]];
            if (!(f == K(0)))
                for (std::size_t j = 0; j < n_; ++j) v[j] -= f * basis_[b][j];
        }
        for (const auto& c : v)
            if (!(c == K(0))) return false;
        return true;
    }

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return n_; }
    const std::vector<std::vector<K>>& basis() const { return basis_; }

  private:
    std::size_t n_;
    std::vector<std::vector<K>> basis_;
    std::vector<std::size_t> pivot_;
};

// Random unimodular matrix: a short product of elementary shears and swaps.
// Entries stay small, determinant is +-1.
template <class K>
Matrix<K> random_unimodular(std::size_t n, std::mt19937_64& rng) {
    Matrix<K> q = Matrix<K>::identity(n);
    if (n < 2) return q;
    const std::size_t steps = 2 * n;
    for (std::size_t s = 0; s < steps; ++s) {
        std::size_t i = rng() % n;
        std::size_t j = rng() % n;
        if (i == j) continue;
        switch (rng() % 3) {
            case 0: {  // col_j += c * col_i
                long c = static_cast<long>(rng() % 5) - 2;
                for (std::size_t r = 0; r < n; ++r) q(r, j) += K(c) * q(r, i);
                break;
            }
            case 1:  // swap columns
                for (std::size_t r = 0; r < n; ++r) std::swap(q(r, i), q(r, j));
                break;
            default:  // negate a column
                for (std::size_t r = 0; r < n; ++r) q(r, i) = -q(r, i);
        }
    }
    return q;
}

}  // namespace jk

#endif
