#ifndef JK_SMITH_HPP
#define JK_SMITH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "jk/matrix.hpp"
#include "jk/poly.hpp"

namespace jk {

/*
 * Smith normal form of a polynomial matrix over Q[x] by classical gcd
 * elimination with minimal-degree pivoting. Returns the monic invariant
 * factors d_1 | d_2 | ... | d_r (r = rank over the fraction field);
 * trailing unit factors are reported as 1.
 */
inline std::vector<UniPoly> smith_normal_form(Matrix<UniPoly> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<UniPoly> factors;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero entry of minimal degree in the trailing block
        std::size_t pi = t, pj = t;
        int best = -1;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const UniPoly& e = m(i, j);
                if (e.is_zero()) continue;
                if (best < 0 || e.degree() < best) {
                    best = e.degree();
                    pi = i;
                    pj = j;
                }
            }
        if (best < 0) break;  // trailing block is zero
        if (pi != t)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pi, j), m(t, j));
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, pj), m(i, t));

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (m(i, t).is_zero()) continue;
            auto [q, r] = UniPoly::divmod(m(i, t), m(t, t));
            for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
            if (!r.is_zero()) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (m(t, j).is_zero()) continue;
            auto [q, r] = UniPoly::divmod(m(t, j), m(t, t));
            for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
            if (!r.is_zero()) clean = false;
        }
        if (!clean) continue;  // smaller-degree remainders appeared; re-pivot

        // pivot must divide every entry of the remaining block
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i)
            for (std::size_t j = t + 1; j < cols && divisible; ++j) {
                if (m(i, j).is_zero()) continue;
                if (!(m(i, j) % m(t, t)).is_zero()) {
                    for (std::size_t jj = t; jj < cols; ++jj) m(t, jj) += m(i, jj);
                    divisible = false;
                }
            }
        if (!divisible) continue;

        factors.push_back(m(t, t).monic());
        ++t;
    }
    return factors;
}

// Characteristic matrix xI - R of a square scalar matrix R.
inline Matrix<UniPoly> characteristic_matrix(const Matrix<Rational>& r) {
    if (!r.is_square()) throw domain_error("characteristic_matrix: matrix not square");
    const std::size_t n = r.rows();
    Matrix<UniPoly> m(n, n, UniPoly());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = UniPoly(-r(i, j));
            if (i == j) m(i, j) += UniPoly::x();
        }
    return m;
}

}  // namespace jk

#endif
