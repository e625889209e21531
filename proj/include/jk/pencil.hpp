#ifndef JK_PENCIL_HPP
#define JK_PENCIL_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "jk/errors.hpp"
#include "jk/factor.hpp"
#include "jk/jk_type.hpp"
#include "jk/linalg.hpp"
#include "jk/matrix.hpp"
#include "jk/poly.hpp"
#include "jk/smith.hpp"

namespace jk {

using RMatrix = Matrix<Rational>;
using Subspace = std::vector<std::vector<Rational>>;

// Pencil A + lambda*B of skew-symmetric forms on Q^n.
struct SkewPencil {
    RMatrix A, B;

    SkewPencil(RMatrix a, RMatrix b) : A(std::move(a)), B(std::move(b)) {
        if (!A.is_square() || !B.is_square() || A.rows() != B.rows())
            throw domain_error("SkewPencil: A and B must be square of equal size");
        if (!A.is_skew_symmetric() || !B.is_skew_symmetric())
            throw domain_error("SkewPencil: forms must be skew-symmetric");
    }

    std::size_t dim() const { return A.rows(); }
    RMatrix at(const Rational& lambda) const { return A + lambda * B; }
    SkewPencil swapped() const { return SkewPencil(B, A); }
};

// ---------------------------------------------------------------------------
// canonical blocks (the basis convention with B-blocks [[0,E],[-E,0]]; the
// rank of A + lambda*B drops at lambda = -eigenvalue)
// ---------------------------------------------------------------------------

namespace canonical {

// Companion matrix of a monic polynomial f, with char poly = f.
inline RMatrix companion(const UniPoly& f) {
    const int d = f.degree();
    if (d < 1 || !f.is_monic()) throw domain_error("companion: monic positive-degree polynomial required");
    RMatrix c(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = Rational(1);
    for (int i = 0; i < d; ++i) c(i, d - 1) = -f.coeff(i);
    return c;
}

// Half-block J for a Jordan pair of total size 2*half: for a finite
// eigenvalue factor f of degree dd, J = I (x) C_f + N (x) I of size
// half = m*dd; for a rational eigenvalue this is the classic Jordan cell.
inline RMatrix jordan_half(const EigenKey& eigen, int block_size) {
    const int dd = eigen.degree();
    if (block_size % (2 * dd) != 0)
        throw domain_error("jordan block size must be divisible by twice the factor degree");
    const int m = block_size / (2 * dd);
    const int half = m * dd;
    RMatrix j(half, half);
    RMatrix cell = eigen.is_infinity() ? RMatrix(1, 1) : companion(eigen.factor());
    for (int b = 0; b < m; ++b) {
        j.set_block(b * dd, b * dd, cell);
        if (b + 1 < m)
            for (int i = 0; i < dd; ++i) j(b * dd + i, (b + 1) * dd + i) = Rational(1);
    }
    return j;
}

inline void place_skew_pair(RMatrix& target_a, RMatrix& target_b, std::size_t at, const RMatrix& upper_a,
                            const RMatrix& upper_b) {
    const std::size_t r = upper_a.rows(), c = upper_a.cols();
    target_a.set_block(at, at + r, upper_a);
    target_a.set_block(at + r, at, -upper_a.transpose());
    target_b.set_block(at, at + r, upper_b);
    target_b.set_block(at + r, at, -upper_b.transpose());
    (void)c;
}

}  // namespace canonical

/*
 * Builds the block-diagonal canonical pencil of a JKType. For a Jordan tuple
 * keyed by a degree-d irreducible factor the scalar eigenvalue in the block
 * is replaced by the companion matrix of the factor (и 1 by the d x d
 * identity), which realizes the factor without leaving the rationals.
 */
inline SkewPencil build_canonical_pencil(const JKType& spec) {
    const std::size_t n = spec.dimension();
    RMatrix a(n, n), b(n, n);
    std::size_t at = 0;
    for (const auto& tuple : spec.tuples) {
        for (int size : tuple.sizes) {
            const int dd = tuple.eigen.degree();
            const int total = size * dd;  // ambient size of this block
            const int half = total / 2;
            RMatrix j = canonical::jordan_half(tuple.eigen, total);
            RMatrix e = RMatrix::identity(half);
            if (tuple.eigen.is_infinity()) {
                canonical::place_skew_pair(a, b, at, e, j);
            } else {
                canonical::place_skew_pair(a, b, at, j, e);
            }
            at += total;
        }
    }
    for (int size : spec.kronecker_sizes) {
        const int k = (size + 1) / 2;
        RMatrix ca(k - 1, k), cb(k - 1, k);
        for (int i = 0; i + 1 < k; ++i) {
            ca(i, i) = Rational(1);
            cb(i, i + 1) = Rational(1);
        }
        canonical::place_skew_pair(a, b, at, ca, cb);
        at += size;
    }
    return SkewPencil(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// pencil analysis
// ---------------------------------------------------------------------------

struct PencilRank {
    std::size_t rank = 0;
    Rational witness;
};

// rk P = max rank of A + lambda*B; n+1 distinct probes suffice because the
// rank can only drop on the root set of a fixed nonzero polynomial.
inline PencilRank pencil_rank(const SkewPencil& p) {
    const std::size_t n = p.dim();
    PencilRank best;
    for (std::size_t t = 0; t <= n; ++t) {
        const Rational lambda(static_cast<long>(t));
        const std::size_t r = rank(p.at(lambda));
        if (r > best.rank) {
            best.rank = r;
            best.witness = lambda;
        }
    }
    return best;
}

struct PencilAnalysis {
    std::size_t n = 0;
    std::size_t rank = 0;
    Rational witness;
    Subspace core;
    Subspace mantle;
    RMatrix recursion_operator;  // on mantle/core, in the complement basis
    bool substituted = false;    // true if B was irregular on mantle/core
    Rational mu;                 // substitution parameter (B' = A + mu B)
    UniPoly char_poly;           // monic; roots are the finite eigenvalues
    std::vector<JordanTuple> jordan;
    std::vector<int> kronecker_indices;  // ascending
    JKType type;
};

namespace detail_pencil {

// Inverse of the eigenvalue substitution induced by B' = A + mu B: an
// eigenvalue nu of (B')^{-1} A corresponds to lambda = mu*nu/(1 - nu) of the
// original pencil (nu = 1 corresponds to infinity). An irreducible factor
// g(nu), g != nu - 1, pulls back to the monic numerator of g(l/(l + mu)).
inline UniPoly mobius_back(const UniPoly& g, const Rational& mu) {
    const int d = g.degree();
    UniPoly result;
    const UniPoly shift{mu, Rational(1)};  // l + mu
    for (int i = 0; i <= d; ++i) {
        result += UniPoly::monomial(g.coeff(i), static_cast<std::size_t>(i)) *
                  shift.pow(static_cast<unsigned long>(d - i));
    }
    if (result.degree() != d) throw internal_error("mobius_back: degree dropped (factor nu - 1 not split off?)");
    return result.monic();
}

struct QuotientSetup {
    std::vector<std::vector<Rational>> complement;  // basis of a complement of core in mantle
    RMatrix a_bar, b_bar;                           // quotient forms of A and B
};

inline Rational form_value(const RMatrix& form, const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational acc(0);
    const auto fv = form.apply(v);
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * fv[i];
    return acc;
}

}  // namespace detail_pencil

/*
 * Full invariant computation for a constant pencil. forced_mu, when set,
 * makes the recursion-operator stage use B' = A + mu B even if B itself is
 * regular; used to validate the eigenvalue remapping on known pencils.
 */
inline PencilAnalysis analyze_pencil(const SkewPencil& p, std::optional<Rational> forced_mu = std::nullopt) {
    PencilAnalysis out;
    const std::size_t n = p.dim();
    out.n = n;
    const PencilRank pr = pencil_rank(p);
    out.rank = pr.rank;
    out.witness = pr.witness;
    const std::size_t corank = n - out.rank;

    // core: sum of kernels of regular forms, saturated deterministically
    SpanBasis<Rational> core_span(n);
    if (corank > 0) {
        std::size_t quiet = 0;
        long probe = 0;
        while (quiet <= n) {
            const Rational lambda(probe++);
            const RMatrix form = p.at(lambda);
            auto rn = rank_nullspace(form);
            if (rn.rank != out.rank) continue;  // irregular value, skip
            bool grew = false;
            for (auto& v : rn.nullspace)
                if (core_span.add(std::move(v))) grew = true;
            quiet = grew ? 0 : quiet + 1;
        }
    }
    out.core = core_span.basis();
    const std::size_t dim_core = out.core.size();

    // mantle: skew-orthogonal complement of the core w.r.t. a regular form
    const RMatrix regular_form = p.at(out.witness);
    if (dim_core == 0) {
        out.mantle.clear();
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> e(n, Rational(0));
            e[i] = Rational(1);
            out.mantle.push_back(std::move(e));
        }
    } else {
        RMatrix pairing(dim_core, n);
        for (std::size_t i = 0; i < dim_core; ++i) {
            const auto row = regular_form.apply(out.core[i]);  // (A_w k_i) as a covector
            for (std::size_t j = 0; j < n; ++j) pairing(i, j) = row[j];
        }
        out.mantle = rank_nullspace(pairing).nullspace;
    }
    const std::size_t dim_mantle = out.mantle.size();
    if (dim_core + dim_mantle != 2 * n - out.rank)
        throw internal_error("analyze_pencil: core/mantle dimensions violate the rank identity");
    {
        // core must lie inside the mantle
        SpanBasis<Rational> mant(n);
        for (const auto& v : out.mantle) mant.add(std::vector<Rational>(v));
        for (const auto& k : out.core)
            if (!mant.contains(std::vector<Rational>(k))) throw internal_error("analyze_pencil: core not inside mantle");
    }

    // complement of the core inside the mantle; quotient forms live on it
    detail_pencil::QuotientSetup q;
    {
        SpanBasis<Rational> span(n);
        for (const auto& k : out.core) span.add(std::vector<Rational>(k));
        for (const auto& m : out.mantle)
            if (span.add(std::vector<Rational>(m))) q.complement.push_back(m);
    }
    const std::size_t c = q.complement.size();

    // the forms must vanish on core x mantle, otherwise they do not descend
    for (const auto& k : out.core)
        for (const auto& m : out.mantle) {
            if (!detail_pencil::form_value(p.A, k, m).is_zero() ||
                !detail_pencil::form_value(p.B, k, m).is_zero())
                throw internal_error("analyze_pencil: forms do not vanish on core x mantle");
        }

    q.a_bar = RMatrix(c, c);
    q.b_bar = RMatrix(c, c);
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            q.a_bar(i, j) = detail_pencil::form_value(p.A, q.complement[i], q.complement[j]);
            q.b_bar(i, j) = detail_pencil::form_value(p.B, q.complement[i], q.complement[j]);
        }

    // recursion operator on mantle/core
    UniPoly char_poly = UniPoly::one();
    std::vector<JordanTuple> tuples;
    out.recursion_operator = RMatrix(c, c);
    if (c > 0) {
        std::optional<RMatrix> binv;
        if (forced_mu) {
            out.substituted = true;
            out.mu = *forced_mu;
            binv = inverse(q.a_bar + out.mu * q.b_bar);
            if (!binv) throw domain_error("analyze_pencil: forced substitution value is not regular");
        } else {
            binv = inverse(q.b_bar);
            if (binv) {
                out.substituted = false;
            } else {
                out.substituted = true;
                for (long m = 1; m <= static_cast<long>(c) + 1; ++m) {
                    out.mu = Rational(m);
                    binv = inverse(q.a_bar + out.mu * q.b_bar);
                    if (binv) break;
                }
                if (!binv) throw internal_error("analyze_pencil: no regular substitute form found");
            }
        }
        out.recursion_operator = *binv * q.a_bar;

        // elementary divisors of the recursion operator via the Smith form
        // of xI - R; they must come in equal pairs
        std::vector<UniPoly> invariant = smith_normal_form(characteristic_matrix(out.recursion_operator));
        std::map<std::pair<std::vector<Rational>, int>, std::pair<UniPoly, int>> count;  // (factor,exp) -> count
        for (const auto& d : invariant) {
            if (d.degree() < 1) continue;
            for (const auto& [f, e] : factor_irreducible(d)) {
                auto key = std::make_pair(f.coeffs(), e);
                auto it = count.find(key);
                if (it == count.end())
                    count.emplace(key, std::make_pair(f, 1));
                else
                    it->second.second += 1;
            }
        }
        std::map<std::vector<Rational>, std::pair<EigenKey, std::vector<int>>> grouped;
        for (const auto& [key, fc] : count) {
            const auto& [factor, cnt] = fc;
            const int exponent = key.second;
            if (cnt % 2 != 0)
                throw internal_error("analyze_pencil: elementary divisors of the recursion operator do not pair up");
            EigenKey eigen = EigenKey::of(factor);
            UniPoly reported = factor;
            if (out.substituted) {
                if (factor == UniPoly::linear_root(Rational(1))) {
                    eigen = EigenKey::infinity();
                } else {
                    reported = detail_pencil::mobius_back(factor, out.mu);
                    eigen = EigenKey::of(reported);
                }
            }
            const int pairs = cnt / 2;
            if (!eigen.is_infinity())
                for (int t = 0; t < pairs; ++t) char_poly *= reported.pow(static_cast<unsigned long>(exponent));
            auto [it, fresh] = grouped.try_emplace(eigen.is_infinity() ? std::vector<Rational>{} : reported.coeffs(),
                                                   std::make_pair(eigen, std::vector<int>{}));
            for (int t = 0; t < pairs; ++t) it->second.second.push_back(2 * exponent);
        }
        for (auto& [unused, tuple] : grouped) tuples.emplace_back(std::move(tuple.second), tuple.first);
    }
    out.char_poly = char_poly.monic();
    out.jordan = std::move(tuples);

    // Kronecker indices from the staircase of polynomial kernel dimensions
    out.kronecker_indices.clear();
    if (corank > 0) {
        std::size_t found = 0;
        long prev_nullity = 0;
        long prev_delta = 0;
        for (int d = 0; found < corank; ++d) {
            // unknowns v_0..v_d; equations: A v_0, B v_{i-1} + A v_i, B v_d
            Matrix<Rational> sys(static_cast<std::size_t>(d + 2) * n, static_cast<std::size_t>(d + 1) * n);
            for (int blk = 0; blk <= d; ++blk) {
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        sys(blk * n + i, blk * n + j) = p.A(i, j);
                        sys((blk + 1) * n + i, blk * n + j) = p.B(i, j);
                    }
            }
            const long nullity = static_cast<long>((d + 1) * n - rank(sys));
            const long delta = nullity - prev_nullity;
            const long count_d = delta - prev_delta;  // number of indices equal to d+1
            if (count_d < 0) throw internal_error("analyze_pencil: staircase dimensions not monotone");
            for (long t = 0; t < count_d; ++t) out.kronecker_indices.push_back(d + 1);
            found += static_cast<std::size_t>(count_d);
            prev_nullity = nullity;
            prev_delta = delta;
            if (d > static_cast<int>(n)) throw internal_error("analyze_pencil: staircase failed to terminate");
        }
    }
    std::sort(out.kronecker_indices.begin(), out.kronecker_indices.end());

    std::vector<int> kron_sizes;
    for (int k : out.kronecker_indices) kron_sizes.push_back(2 * k - 1);
    out.type = JKType(out.jordan, kron_sizes);
    out.jordan = out.type.tuples;  // canonical order
    if (out.type.dimension() != n)
        throw internal_error("analyze_pencil: block dimensions do not add up to the space dimension");
    return out;
}

// ---------------------------------------------------------------------------
// spec-level operations
// ---------------------------------------------------------------------------

inline std::pair<Subspace, Subspace> core_mantle(const SkewPencil& p) {
    auto an = analyze_pencil(p);
    return {an.core, an.mantle};
}

inline std::pair<RMatrix, UniPoly> recursion_char_poly(const SkewPencil& p) {
    auto an = analyze_pencil(p);
    return {an.recursion_operator, an.char_poly};
}

inline std::vector<int> kronecker_indices(const SkewPencil& p) {
    return analyze_pencil(p).kronecker_indices;
}

inline std::vector<JordanTuple> jordan_structure(const SkewPencil& p) { return analyze_pencil(p).jordan; }

inline JKType jk_invariants(const SkewPencil& p) { return analyze_pencil(p).type; }

inline SkewPencil congruence_transform(const SkewPencil& p, const RMatrix& q) {
    if (!q.is_square() || q.rows() != p.dim()) throw domain_error("congruence_transform: bad transform shape");
    if (!inverse(q)) throw domain_error("congruence_transform: singular transform");
    return SkewPencil(congruence(q, p.A), congruence(q, p.B));
}

inline std::size_t minor_enumeration_limit() {
    if (const char* env = std::getenv("JK_MAX_DIM")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return 24;
}

/*
 * Raw monic gcd of the Pfaffians of all diagonal minors of order rk P of
 * A + lambda*B, as a polynomial in lambda. Each minor's Pfaffian has degree
 * <= rk/2 and is computed exactly by evaluation at rk/2 + 1 nodes and
 * interpolation; the running gcd stops the enumeration once it reaches 1.
 */
inline UniPoly pfaffian_minor_gcd(const SkewPencil& p, std::size_t max_dim = 0) {
    const std::size_t n = p.dim();
    const std::size_t guard = max_dim ? max_dim : minor_enumeration_limit();
    if (n > guard) throw size_error("pfaffian_minor_gcd: dimension exceeds minor enumeration guard");
    const std::size_t r = pencil_rank(p).rank;
    if (r == 0) return UniPoly::one();

    std::vector<RMatrix> nodes;  // A + t B for t = 0..r/2
    for (std::size_t t = 0; t <= r / 2; ++t) nodes.push_back(p.at(Rational(static_cast<long>(t))));

    UniPoly g;  // running gcd; zero until the first nonzero Pfaffian
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    bool any_nonzero = false;
    for (;;) {
        std::vector<std::pair<Rational, Rational>> points;
        points.reserve(nodes.size());
        bool all_zero = true;
        for (std::size_t t = 0; t < nodes.size(); ++t) {
            Rational value = pfaffian(nodes[t].principal_submatrix(idx));
            if (!value.is_zero()) all_zero = false;
            points.emplace_back(Rational(static_cast<long>(t)), std::move(value));
        }
        if (!all_zero) {
            any_nonzero = true;
            const UniPoly pf = UniPoly::interpolate(points);
            g = g.is_zero() ? pf.monic() : UniPoly::gcd(g, pf);
            if (g.is_one()) break;  // gcd can only shrink
        }
        // next r-combination of {0..n-1}
        std::size_t k = r;
        while (k > 0 && idx[k - 1] == n - (r - k) - 1) --k;
        if (k == 0) break;
        ++idx[k - 1];
        for (std::size_t i = k; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!any_nonzero) throw internal_error("pfaffian_minor_gcd: all rank-order minors vanished");
    return g;
}

/*
 * Characteristic polynomial via the Pfaffian-minor gcd. Under the fixed
 * sign convention the rank of A + lambda*B drops at minus the eigenvalues,
 * so the gcd is normalized by lambda -> -lambda before being returned.
 */
inline UniPoly char_poly_pfaffian_gcd(const SkewPencil& p, std::size_t max_dim = 0) {
    return pfaffian_minor_gcd(p, max_dim).negate_variable().monic();
}

}  // namespace jk

#endif
