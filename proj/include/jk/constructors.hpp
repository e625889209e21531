#ifndef JK_CONSTRUCTORS_HPP
#define JK_CONSTRUCTORS_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "jk/errors.hpp"
#include "jk/jk_type.hpp"
#include "jk/lie_algebra.hpp"
#include "jk/pencil.hpp"

namespace jk {

/*
 * Realization families: explicit structure constants whose generic JK
 * invariants are known in advance. Each constructor returns the algebra
 * together with the expected algebraic type and the linear semi-invariant
 * directions carrying the eigenvalues.
 */

struct EigenDirection {
    std::vector<Rational> vector;
    std::string description;
};

struct ExpectedRealization {
    LieAlgebra algebra;
    AlgebraicType expected;
    std::vector<EigenDirection> eigen_directions;
};

namespace detail_constr {

inline std::vector<int> half_sizes(const std::vector<int>& tuple) {
    std::vector<int> ns;
    for (int v : tuple) {
        if (v <= 0 || v % 2 != 0) throw domain_error("constructor: Jordan sizes must be positive even");
        ns.push_back(v / 2);
    }
    if (!std::is_sorted(ns.rbegin(), ns.rend())) throw domain_error("constructor: tuple must be descending");
    return ns;
}

// Index bookkeeping for a family of (e^i_tj, f^i_tj) pairs: tuple t has
// half-sizes ns[t], e^i_tj exists for i < ns[t].size(), 1 <= j <= ns[t][i].
struct PairBlocks {
    std::vector<std::vector<int>> ns;      // half-sizes per tuple
    std::vector<std::vector<std::size_t>> e_base, f_base;  // base index per (t, i); entry j-1 offsets
    std::size_t total = 0;                 // number of e/f pairs overall

    explicit PairBlocks(const std::vector<std::vector<int>>& tuples) {
        for (const auto& t : tuples) ns.push_back(half_sizes(t));
        for (const auto& t : ns)
            for (int v : t) total += static_cast<std::size_t>(v);
    }

    // assigns indices: e's first then f's, both in (t, i, j) order, starting
    // at `offset`; returns one past the last used index
    std::size_t assign(std::size_t offset) {
        std::size_t at = offset;
        e_base.assign(ns.size(), {});
        f_base.assign(ns.size(), {});
        for (std::size_t t = 0; t < ns.size(); ++t)
            for (std::size_t i = 0; i < ns[t].size(); ++i) {
                e_base[t].push_back(at);
                at += static_cast<std::size_t>(ns[t][i]);
            }
        for (std::size_t t = 0; t < ns.size(); ++t)
            for (std::size_t i = 0; i < ns[t].size(); ++i) {
                f_base[t].push_back(at);
                at += static_cast<std::size_t>(ns[t][i]);
            }
        return at;
    }

    std::size_t e(std::size_t t, std::size_t i, int j) const { return e_base[t][i] + j - 1; }
    std::size_t f(std::size_t t, std::size_t i, int j) const { return f_base[t][i] + j - 1; }

    void label(LieAlgebra& g) const {
        for (std::size_t t = 0; t < ns.size(); ++t)
            for (std::size_t i = 0; i < ns[t].size(); ++i)
                for (int j = 1; j <= ns[t][i]; ++j) {
                    const std::string suffix = "^" + std::to_string(i + 1) + "_" +
                                               (ns.size() > 1 ? std::to_string(t + 1) + "," : "") +
                                               std::to_string(j);
                    g.label(e(t, i, j)) = "e" + suffix;
                    g.label(f(t, i, j)) = "f" + suffix;
                }
    }
};

}  // namespace detail_constr

// One Kronecker (2m+1)x(2m+1) block: basis g_1..g_m, h_0..h_m with
// [g_i, h_0] = h_0 and [g_i, h_i] = h_i.
inline ExpectedRealization kronecker_algebra(int m) {
    if (m < 0) throw domain_error("kronecker_algebra: m must be nonnegative");
    const std::size_t dim = 2 * static_cast<std::size_t>(m) + 1;
    LieAlgebra g(dim);
    for (int i = 1; i <= m; ++i) g.label(i - 1) = "g_" + std::to_string(i);
    for (int i = 0; i <= m; ++i) g.label(m + i) = "h_" + std::to_string(i);
    const auto h = [&](int i) { return static_cast<std::size_t>(m + i); };
    for (int i = 1; i <= m; ++i) {
        g.add_term(i - 1, h(0), h(0), Rational(1));
        g.add_term(i - 1, h(i), h(i), Rational(1));
    }
    return {std::move(g), AlgebraicType({}, {2 * m + 1}), {}};
}

// One Jordan tuple with a unique maximum, J(2 n_1 + 2, 2 n_2, ..., 2 n_s):
// basis e_0, f_0, e^i_j, f^i_j with [e^i_j, f^i_k] = e^i_{j-k} for j >= k
// (index 0 shared between all i). The empty list gives J(2) on aff(1).
inline ExpectedRealization jordan_tuple_algebra(const std::vector<int>& ns) {
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i] < 1) throw domain_error("jordan_tuple_algebra: entries must be positive");
        if (i && ns[i] > ns[i - 1]) throw domain_error("jordan_tuple_algebra: list must be descending");
    }
    std::size_t pairs = 0;
    for (int v : ns) pairs += static_cast<std::size_t>(v);
    const std::size_t dim = 2 + 2 * pairs;
    LieAlgebra g(dim);
    // basis order: e_0, e^i_j (by tuple then j), f_0, f^i_j
    const std::size_t e0 = 0, f0 = 1 + pairs;
    std::vector<std::size_t> ebase, fbase;
    {
        std::size_t at = 1;
        for (int v : ns) {
            ebase.push_back(at);
            at += static_cast<std::size_t>(v);
        }
        at = f0 + 1;
        for (int v : ns) {
            fbase.push_back(at);
            at += static_cast<std::size_t>(v);
        }
    }
    auto e = [&](std::size_t i, int j) { return j == 0 ? e0 : ebase[i] + j - 1; };
    auto f = [&](std::size_t i, int j) { return j == 0 ? f0 : fbase[i] + j - 1; };
    g.label(e0) = "e_0";
    g.label(f0) = "f_0";
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (int j = 1; j <= ns[i]; ++j) {
            g.label(e(i, j)) = "e^" + std::to_string(i + 1) + "_" + std::to_string(j);
            g.label(f(i, j)) = "f^" + std::to_string(i + 1) + "_" + std::to_string(j);
        }
    g.add_term(e0, f0, e0, Rational(1));  // [e_0, f_0] = e_0
    for (std::size_t i = 0; i < ns.size(); ++i)
        for (int j = 1; j <= ns[i]; ++j) {
            g.add_term(e(i, j), f0, e(i, j), Rational(1));  // k = 0
            for (int k = 1; k <= j; ++k) g.add_term(e(i, j), f(i, k), e(i, j - k), Rational(1));
        }
    std::vector<int> tuple{ns.empty() ? 2 : 2 * ns[0] + 2};
    for (std::size_t i = 1; i < ns.size(); ++i) tuple.push_back(2 * ns[i]);
    std::vector<Rational> dir(dim, Rational(0));
    dir[e0] = Rational(1);
    return {std::move(g), AlgebraicType({tuple}, {}), {{dir, "p_0"}}};
}

/*
 * Jordan tuples pinned to central elements. centers = 1 realizes one tuple
 * (of any shape) plus one trivial Kronecker block: [e^i_j, f^i_k] =
 * e^i_{j-k} for j > k and h for j = k. centers = 2 realizes any collection
 * of tuples plus two trivial blocks, tuple t commuting to h_1 + t h_2.
 */
inline ExpectedRealization central_jordan_algebra(const std::vector<std::vector<int>>& tuples, int centers) {
    if (centers != 1 && centers != 2) throw domain_error("central_jordan_algebra: centers must be 1 or 2");
    if (centers == 1 && tuples.size() != 1)
        throw domain_error(
            "central_jordan_algebra: one trivial Kronecker block admits exactly one Jordan tuple "
            "(more than one tuple with multiple maxima is obstructed)");
    detail_constr::PairBlocks blocks(tuples);
    const std::size_t dim = 2 * blocks.total + static_cast<std::size_t>(centers);
    LieAlgebra g(dim);
    const std::size_t end = blocks.assign(0);
    blocks.label(g);
    const std::size_t h1 = end, h2 = end + 1;
    g.label(h1) = centers == 1 ? "h" : "h_1";
    if (centers == 2) g.label(h2) = "h_2";

    std::vector<EigenDirection> dirs;
    for (std::size_t t = 0; t < blocks.ns.size(); ++t) {
        std::vector<Rational> dir(dim, Rational(0));
        dir[h1] = Rational(1);
        if (centers == 2) dir[h2] = Rational(static_cast<long>(t) + 1);
        dirs.push_back({dir, centers == 1 ? "h" : "h_1 + " + std::to_string(t + 1) + " h_2"});
        for (std::size_t i = 0; i < blocks.ns[t].size(); ++i)
            for (int j = 1; j <= blocks.ns[t][i]; ++j)
                for (int k = 1; k <= j; ++k) {
                    if (k < j) {
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), blocks.e(t, i, j - k), Rational(1));
                    } else {
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), h1, Rational(1));
                        if (centers == 2)
                            g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), h2, Rational(static_cast<long>(t) + 1));
                    }
                }
    }
    std::vector<int> kron(static_cast<std::size_t>(centers), 1);
    return {std::move(g), AlgebraicType(tuples, kron), std::move(dirs)};
}

/*
 * Any collection of Jordan tuples plus one Kronecker 3x3 block: basis
 * g, h_1, h_2, e^i_tj, f^i_tj with [g, h_i] = h_i, [g, e^i_tk] = e^i_tk and
 * [e^i_tj, f^i_tk] = e^i_{t,j-k} (j > k) or alpha_t h_1 + beta_t h_2
 * (j = k); the pairs (alpha_t : beta_t) must be projectively distinct.
 */
inline ExpectedRealization kron3_algebra(const std::vector<std::vector<int>>& tuples,
                                         const std::vector<std::pair<Rational, Rational>>& pairs) {
    if (pairs.size() != tuples.size()) throw domain_error("kron3_algebra: one (alpha, beta) pair per tuple");
    for (std::size_t s = 0; s < pairs.size(); ++s) {
        if (pairs[s].first.is_zero() && pairs[s].second.is_zero())
            throw domain_error("kron3_algebra: (alpha, beta) must be nonzero");
        for (std::size_t t = s + 1; t < pairs.size(); ++t)
            if (pairs[s].first * pairs[t].second == pairs[s].second * pairs[t].first)
                throw domain_error("kron3_algebra: pairs (alpha_t : beta_t) must be pairwise distinct");
    }
    detail_constr::PairBlocks blocks(tuples);
    const std::size_t dim = 3 + 2 * blocks.total;
    LieAlgebra g(dim);
    const std::size_t gg = 0, h1 = 1, h2 = 2;
    const std::size_t end = blocks.assign(3);
    (void)end;
    blocks.label(g);
    g.label(gg) = "g";
    g.label(h1) = "h_1";
    g.label(h2) = "h_2";
    g.add_term(gg, h1, h1, Rational(1));
    g.add_term(gg, h2, h2, Rational(1));
    std::vector<EigenDirection> dirs;
    for (std::size_t t = 0; t < blocks.ns.size(); ++t) {
        std::vector<Rational> dir(dim, Rational(0));
        dir[h1] = pairs[t].first;
        dir[h2] = pairs[t].second;
        dirs.push_back({dir, "alpha_" + std::to_string(t + 1) + " h_1 + beta_" + std::to_string(t + 1) + " h_2"});
        for (std::size_t i = 0; i < blocks.ns[t].size(); ++i)
            for (int j = 1; j <= blocks.ns[t][i]; ++j) {
                g.add_term(gg, blocks.e(t, i, j), blocks.e(t, i, j), Rational(1));
                for (int k = 1; k <= j; ++k) {
                    if (k < j) {
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), blocks.e(t, i, j - k), Rational(1));
                    } else {
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), h1, pairs[t].first);
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), h2, pairs[t].second);
                    }
                }
            }
    }
    std::vector<int> kron{3};
    return {std::move(g), AlgebraicType(tuples, kron), std::move(dirs)};
}

/*
 * d <= m+1 Jordan tuples plus one Kronecker (2m+1)x(2m+1) block: the
 * Kronecker part is the kronecker_algebra and tuple t is attached to the
 * semi-invariant h_t, matching weights: [g_u, e^i_0k] = e^i_0k for all u,
 * [g_t, e^i_tk] = e^i_tk for t >= 1.
 */
inline ExpectedRealization mixed_algebra(int m, const std::vector<std::vector<int>>& tuples) {
    if (m < 0) throw domain_error("mixed_algebra: m must be nonnegative");
    const std::size_t d = tuples.size();
    if (d > static_cast<std::size_t>(m) + 1)
        throw domain_error("mixed_algebra: at most m+1 Jordan tuples fit one Kronecker (2m+1) block");
    detail_constr::PairBlocks blocks(tuples);
    const std::size_t dim = 2 * static_cast<std::size_t>(m) + 1 + 2 * blocks.total;
    LieAlgebra g(dim);
    const auto gidx = [&](int u) { return static_cast<std::size_t>(u - 1); };        // u = 1..m
    const auto hidx = [&](int t) { return static_cast<std::size_t>(m + t); };        // t = 0..m
    const std::size_t end = blocks.assign(2 * static_cast<std::size_t>(m) + 1);
    (void)end;
    blocks.label(g);
    for (int u = 1; u <= m; ++u) g.label(gidx(u)) = "g_" + std::to_string(u);
    for (int t = 0; t <= m; ++t) g.label(hidx(t)) = "h_" + std::to_string(t);
    for (int u = 1; u <= m; ++u) {
        g.add_term(gidx(u), hidx(0), hidx(0), Rational(1));
        g.add_term(gidx(u), hidx(u), hidx(u), Rational(1));
    }
    std::vector<EigenDirection> dirs;
    for (std::size_t t = 0; t < d; ++t) {
        std::vector<Rational> dir(dim, Rational(0));
        dir[hidx(static_cast<int>(t))] = Rational(1);
        dirs.push_back({dir, "h_" + std::to_string(t)});
        for (std::size_t i = 0; i < blocks.ns[t].size(); ++i)
            for (int j = 1; j <= blocks.ns[t][i]; ++j) {
                if (t == 0) {
                    for (int u = 1; u <= m; ++u)
                        g.add_term(gidx(u), blocks.e(t, i, j), blocks.e(t, i, j), Rational(1));
                } else {
                    g.add_term(gidx(static_cast<int>(t)), blocks.e(t, i, j), blocks.e(t, i, j), Rational(1));
                }
                for (int k = 1; k <= j; ++k) {
                    if (k < j)
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), blocks.e(t, i, j - k), Rational(1));
                    else
                        g.add_term(blocks.e(t, i, j), blocks.f(t, i, k), hidx(static_cast<int>(t)), Rational(1));
                }
            }
    }
    std::vector<int> kron{2 * m + 1};
    return {std::move(g), AlgebraicType(tuples, kron), std::move(dirs)};
}

// Direct sum: block structure constants; the generic type is the multiset
// union of the summands' types.
inline LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
    std::vector<std::string> labels;
    for (const auto& l : g1.labels()) labels.push_back(l + "'");
    for (const auto& l : g2.labels()) labels.push_back(l + "''");
    LieAlgebra g(g1.dim() + g2.dim(), std::move(labels));
    for (const auto& [key, terms] : g1.table())
        for (const auto& [k, c] : terms) g.add_term(key.first, key.second, k, c);
    const std::size_t off = g1.dim();
    for (const auto& [key, terms] : g2.table())
        for (const auto& [k, c] : terms) g.add_term(off + key.first, off + key.second, off + k, c);
    return g;
}

inline AlgebraicType algebraic_union(const AlgebraicType& a, const AlgebraicType& b) {
    AlgebraicType u;
    u.kronecker = a.kronecker;
    u.kronecker.insert(u.kronecker.end(), b.kronecker.begin(), b.kronecker.end());
    u.tuples = a.tuples;
    u.tuples.insert(u.tuples.end(), b.tuples.begin(), b.tuples.end());
    u.canonicalize();
    return u;
}

/*
 * Semidirect sum sl(n) |x (C^n)^k with n = k*l, acting by the standard
 * representation on each copy. Index 1, no proper semi-invariants; the
 * invariants are one Kronecker block of size k*l*(l+1) - 1 and
 * k*l*(l+1)/2 Jordan tuples (2, ..., 2) of length k-1.
 */
inline ExpectedRealization vorushilov_algebra(int k, int l) {
    if (k < 1 || l < 1) throw domain_error("vorushilov_algebra: k, l must be positive");
    const int n = k * l;
    if (n < 2) throw domain_error("vorushilov_algebra: kl >= 2 required (sl(1) is degenerate)");
    if (n > 4) throw domain_error("vorushilov_algebra: kl <= 4 (desk scale)");
    const std::size_t sl_dim = static_cast<std::size_t>(n) * n - 1;
    const std::size_t dim = sl_dim + static_cast<std::size_t>(k) * n;
    if (dim > 20) throw size_error("vorushilov_algebra: dimension exceeds desk-scale guard");

    // basis of sl(n): E_ab (a != b) then D_i = E_ii - E_{i+1,i+1}
    struct SlBasis {
        int n;
        std::vector<std::pair<int, int>> offdiag;
        std::size_t index_of(int a, int b) const {
            for (std::size_t t = 0; t < offdiag.size(); ++t)
                if (offdiag[t] == std::make_pair(a, b)) return t;
            throw internal_error("vorushilov: bad off-diagonal index");
        }
    } sl{n, {}};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b) sl.offdiag.emplace_back(a, b);
    const std::size_t diag_base = sl.offdiag.size();

    LieAlgebra g(dim);
    for (std::size_t t = 0; t < sl.offdiag.size(); ++t)
        g.label(t) = "E_" + std::to_string(sl.offdiag[t].first + 1) + std::to_string(sl.offdiag[t].second + 1);
    for (int i = 0; i + 1 < n; ++i) g.label(diag_base + i) = "D_" + std::to_string(i + 1);
    const auto vidx = [&](int copy, int i) { return sl_dim + static_cast<std::size_t>(copy) * n + i; };
    for (int c = 0; c < k; ++c)
        for (int i = 0; i < n; ++i) g.label(vidx(c, i)) = "v^" + std::to_string(c + 1) + "_" + std::to_string(i + 1);

    // matrix of a basis element
    const auto basis_matrix = [&](std::size_t t) {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
        if (t < diag_base) {
            m[sl.offdiag[t].first][sl.offdiag[t].second] = Rational(1);
        } else {
            const int i = static_cast<int>(t - diag_base);
            m[i][i] = Rational(1);
            m[i + 1][i + 1] = Rational(-1);
        }
        return m;
    };
    // decompose a traceless matrix in the chosen basis
    const auto decompose = [&](const std::vector<std::vector<Rational>>& m, std::size_t a, std::size_t b) {
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c && !m[r][c].is_zero()) g.add_term(a, b, sl.index_of(r, c), m[r][c]);
        Rational partial(0);
        for (int i = 0; i + 1 < n; ++i) {
            partial += m[i][i];
            if (!partial.is_zero()) g.add_term(a, b, diag_base + i, partial);
        }
    };

    for (std::size_t s = 0; s < sl_dim; ++s)
        for (std::size_t t = s + 1; t < sl_dim; ++t) {
            const auto ms = basis_matrix(s), mt = basis_matrix(t);
            std::vector<std::vector<Rational>> comm(n, std::vector<Rational>(n, Rational(0)));
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c) comm[a][b] += ms[a][c] * mt[c][b] - mt[a][c] * ms[c][b];
            decompose(comm, s, t);
        }
    for (std::size_t s = 0; s < sl_dim; ++s) {
        const auto ms = basis_matrix(s);
        for (int c = 0; c < k; ++c)
            for (int i = 0; i < n; ++i)
                for (int a = 0; a < n; ++a)
                    if (!ms[a][i].is_zero()) g.add_term(s, vidx(c, i), vidx(c, a), ms[a][i]);
    }

    std::vector<std::vector<int>> tuples;
    const int tuple_count = k * l * (l + 1) / 2;
    if (k > 1)
        for (int t = 0; t < tuple_count; ++t) tuples.push_back(std::vector<int>(k - 1, 2));
    std::vector<int> kron{k * l * (l + 1) - 1};
    return {std::move(g), AlgebraicType(tuples, kron), {}};
}

// ---------------------------------------------------------------------------
// affine bracket pairs
// ---------------------------------------------------------------------------

// Affine function of the coordinates: constant + <gradient, y>.
struct AffineFunc {
    Rational constant;
    std::vector<Rational> gradient;  // indexed by ambient coordinate

    Rational operator()(const std::vector<Rational>& y) const {
        Rational v = constant;
        for (std::size_t i = 0; i < gradient.size() && i < y.size(); ++i) v += gradient[i] * y[i];
        return v;
    }
    bool is_zero() const {
        if (!constant.is_zero()) return false;
        for (const auto& c : gradient)
            if (!c.is_zero()) return false;
        return true;
    }
};

/*
 * A pair of compatible brackets where A has affine coefficients and B is
 * constant, built from Jordan tuples pinned to affine functions f_t of the
 * z-coordinates: {p^i_tj, q^i_tk} = p^i_{t,j-k} (j > k) and f_t(z) + l d_t
 * (j = k). Pointwise, the JK invariants are the tuples (merged when
 * f_t/d_t collide) plus one trivial Kronecker block per z-coordinate.
 */
struct AffineBracketPair {
    std::size_t dim = 0;
    std::size_t z_count = 0;
    std::vector<std::vector<AffineFunc>> A, B;  // skew matrices of affine entries
    std::vector<std::vector<int>> tuples;
    std::vector<AffineFunc> f;  // per tuple, in ambient coordinates
    std::vector<Rational> d;    // per tuple

    RMatrix a_at(const std::vector<Rational>& point) const {
        RMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = A[i][j](point);
        return m;
    }
    RMatrix b_at(const std::vector<Rational>& point) const {
        RMatrix m(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = B[i][j](point);
        return m;
    }
    SkewPencil pencil_at(const std::vector<Rational>& point) const {
        return SkewPencil(a_at(point), b_at(point));
    }

    // expected invariants at a point: tuples grouped by equal eigenvalue
    // f_t(z)/d_t, plus one trivial Kronecker block per z-coordinate
    JKType expected_at(const std::vector<Rational>& point) const {
        std::map<Rational, std::vector<int>> grouped;
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            const Rational eigen = f[t](point) / d[t];
            auto& sizes = grouped[eigen];
            sizes.insert(sizes.end(), tuples[t].begin(), tuples[t].end());
        }
        std::vector<JordanTuple> jt;
        for (auto& [eigen, sizes] : grouped) jt.emplace_back(sizes, EigenKey::rational(eigen));
        return JKType(std::move(jt), std::vector<int>(z_count, 1));
    }
};

/*
 * f: one affine function of the z-coordinates per tuple (gradients indexed
 * by z only), d: the corresponding nonzero constants of the B bracket.
 */
inline AffineBracketPair affine_pencil_build(const std::vector<std::vector<int>>& tuples,
                                             const std::vector<AffineFunc>& f, const std::vector<Rational>& d) {
    if (f.size() != tuples.size() || d.size() != tuples.size())
        throw domain_error("affine_pencil_build: need one f_t and one d_t per tuple");
    for (const auto& dt : d)
        if (dt.is_zero()) throw domain_error("affine_pencil_build: d_t must be nonzero");
    std::size_t z_count = 0;
    for (const auto& ft : f) z_count = std::max(z_count, ft.gradient.size());

    detail_constr::PairBlocks blocks(tuples);
    AffineBracketPair pair;
    pair.z_count = z_count;
    pair.dim = 2 * blocks.total + z_count;
    const std::size_t zbase = blocks.assign(0);
    pair.tuples = tuples;
    pair.d = d;
    pair.A.assign(pair.dim, std::vector<AffineFunc>(pair.dim));
    pair.B.assign(pair.dim, std::vector<AffineFunc>(pair.dim));
    for (const auto& ft : f) {
        AffineFunc ambient;
        ambient.constant = ft.constant;
        ambient.gradient.assign(pair.dim, Rational(0));
        for (std::size_t z = 0; z < ft.gradient.size(); ++z) ambient.gradient[zbase + z] = ft.gradient[z];
        pair.f.push_back(std::move(ambient));
    }

    auto set_skew = [&](std::vector<std::vector<AffineFunc>>& m, std::size_t i, std::size_t j, AffineFunc v) {
        AffineFunc neg;
        neg.constant = -v.constant;
        neg.gradient.reserve(v.gradient.size());
        for (const auto& c : v.gradient) neg.gradient.push_back(-c);
        m[i][j] = std::move(v);
        m[j][i] = std::move(neg);
    };

    for (std::size_t t = 0; t < blocks.ns.size(); ++t)
        for (std::size_t i = 0; i < blocks.ns[t].size(); ++i)
            for (int j = 1; j <= blocks.ns[t][i]; ++j)
                for (int k = 1; k <= j; ++k) {
                    if (k < j) {
                        AffineFunc coord;  // the coordinate function p^i_{t, j-k}
                        coord.constant = Rational(0);
                        coord.gradient.assign(pair.dim, Rational(0));
                        coord.gradient[blocks.e(t, i, j - k)] = Rational(1);
                        set_skew(pair.A, blocks.e(t, i, j), blocks.f(t, i, k), std::move(coord));
                    } else {
                        set_skew(pair.A, blocks.e(t, i, j), blocks.f(t, i, k), pair.f[t]);
                        AffineFunc constant;
                        constant.constant = d[t];
                        set_skew(pair.B, blocks.e(t, i, j), blocks.f(t, i, k), std::move(constant));
                    }
                }
    return pair;
}

struct JacobiatorViolation {
    std::size_t a, b, c;
    Rational value;
};

/*
 * Exact Jacobi decision for brackets with affine coefficient matrices: the
 * Jacobiator entries are affine functions of the coordinates, so vanishing
 * at the origin and at the dim unit points decides identical vanishing.
 * Checks A + lambda*B at each sample and B alone (the swap at infinity).
 */
inline std::optional<JacobiatorViolation> affine_jacobiator_check(const AffineBracketPair& pair,
                                                                  const std::vector<Rational>& lambda_samples) {
    const std::size_t n = pair.dim;
    std::vector<std::vector<Rational>> points;
    points.emplace_back(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = Rational(1);
        points.push_back(std::move(e));
    }
    auto check_member = [&](const Rational* lambda) -> std::optional<JacobiatorViolation> {
        // assemble the affine coefficient matrix of this pencil member
        std::vector<std::vector<AffineFunc>> m(n, std::vector<AffineFunc>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (lambda == nullptr) {
                    m[i][j] = pair.B[i][j];
                    continue;
                }
                AffineFunc out = pair.A[i][j];
                const AffineFunc& b = pair.B[i][j];
                out.constant += *lambda * b.constant;
                if (out.gradient.size() < b.gradient.size()) out.gradient.resize(b.gradient.size(), Rational(0));
                for (std::size_t t = 0; t < b.gradient.size(); ++t) out.gradient[t] += *lambda * b.gradient[t];
                m[i][j] = std::move(out);
            }
        auto grad = [&](std::size_t i, std::size_t j, std::size_t dd) {
            return dd < m[i][j].gradient.size() ? m[i][j].gradient[dd] : Rational(0);
        };
        // values of every entry at every probe point
        std::vector<std::vector<std::vector<Rational>>> val(points.size());
        for (std::size_t pt = 0; pt < points.size(); ++pt) {
            val[pt].assign(n, std::vector<Rational>(n, Rational(0)));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) val[pt][i][j] = m[i][j](points[pt]);
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                for (std::size_t c = b + 1; c < n; ++c)
                    for (std::size_t pt = 0; pt < points.size(); ++pt) {
                        Rational j(0);
                        for (std::size_t dd = 0; dd < n; ++dd) {
                            j += val[pt][a][dd] * grad(b, c, dd) + val[pt][b][dd] * grad(c, a, dd) +
                                 val[pt][c][dd] * grad(a, b, dd);
                        }
                        if (!j.is_zero()) return JacobiatorViolation{a, b, c, j};
                    }
        return std::nullopt;
    };
    for (const auto& lambda : lambda_samples) {
        if (auto v = check_member(&lambda)) return v;
    }
    return check_member(nullptr);  // the constant bracket B (swap at infinity)
}

}  // namespace jk

#endif
