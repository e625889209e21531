#ifndef JK_LIE_INVARIANTS_HPP
#define JK_LIE_INVARIANTS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jk/factor.hpp"
#include "jk/lie_algebra.hpp"
#include "jk/pencil.hpp"

namespace jk {

/*
 * Sampling-based invariants of a Lie algebra. "Generic" is operationalized
 * by a stability protocol: the candidate attaining maximal pencil rank and
 * then maximal mantle dimension wins (majority by algebraic type among such
 * trials); if fewer than trials-1 of all trials agree with the winner, the
 * sampling height is doubled once, and persistent disagreement is reported
 * as unstable rather than resolved silently.
 */

inline std::vector<Rational> sample_vector(std::size_t n, long height, std::mt19937_64& rng) {
    std::vector<Rational> v(n);
    const unsigned long span = static_cast<unsigned long>(2 * height + 1);
    for (auto& c : v) c = Rational(static_cast<long>(rng() % span) - height);
    return v;
}

struct StabilityReport {
    std::size_t agreement = 0;  // trials agreeing with the reported value
    std::size_t trials = 0;
    long height_used = 0;
    bool stable = false;
};

struct GenericInvariants {
    JKType representative;     // type of one sampled pencil attaining the generic value
    AlgebraicType algebraic;   // eigenvalue data forgotten
    std::size_t rank = 0;
    StabilityReport stability;
};

inline GenericInvariants generic_jk_invariants(const LieAlgebra& g, unsigned long seed = 0,
                                               std::size_t trials = 5, long height = 10) {
    if (trials < 1) throw domain_error("generic_jk_invariants: trials must be positive");
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc908ull);
    const std::size_t n = g.dim();

    GenericInvariants out;
    for (int attempt = 0; attempt < 2; ++attempt) {
        struct Trial {
            JKType type;
            AlgebraicType algebraic;
            std::size_t rank;
            std::size_t mantle;
        };
        std::vector<Trial> observed;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto x = sample_vector(n, height, rng);
            const auto a = sample_vector(n, height, rng);
            const auto an = analyze_pencil(g.lie_pencil(x, a));
            observed.push_back({an.type, an.type.algebraic(), an.rank, an.mantle.size()});
        }
        std::size_t best = 0;
        for (std::size_t t = 1; t < observed.size(); ++t) {
            if (observed[t].rank > observed[best].rank ||
                (observed[t].rank == observed[best].rank && observed[t].mantle > observed[best].mantle))
                best = t;
        }
        // majority algebraic type among trials attaining the best (rank, mantle)
        std::map<AlgebraicType, std::size_t> votes;
        for (const auto& tr : observed)
            if (tr.rank == observed[best].rank && tr.mantle == observed[best].mantle) ++votes[tr.algebraic];
        const AlgebraicType* winner = nullptr;
        std::size_t winner_votes = 0;
        for (const auto& [type, count] : votes)
            if (count > winner_votes) {
                winner = &type;
                winner_votes = count;
            }
        std::size_t agreement = 0;
        for (const auto& tr : observed)
            if (tr.algebraic == *winner) ++agreement;
        for (const auto& tr : observed)
            if (tr.algebraic == *winner && tr.rank == observed[best].rank) {
                out.representative = tr.type;
                out.algebraic = tr.algebraic;
                out.rank = tr.rank;
                break;
            }
        out.stability = {agreement, trials, height, agreement + 1 >= trials};
        if (out.stability.stable) return out;
        height *= 2;  // one doubling, then report instability as observed
    }
    return out;
}

struct IndexResult {
    std::size_t index = 0;  // min dim Ker A_x over samples
    StabilityReport stability;
};

inline IndexResult lie_index(const LieAlgebra& g, unsigned long seed = 0, std::size_t trials = 5,
                             long height = 10) {
    if (trials < 1) throw domain_error("lie_index: trials must be positive");
    std::mt19937_64 rng(seed ^ 0xbb67ae8584caa73bull);
    const std::size_t n = g.dim();
    IndexResult out;
    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<std::size_t> coranks;
        for (std::size_t t = 0; t < trials; ++t) {
            const auto x = sample_vector(n, height, rng);
            coranks.push_back(n - rank(g.poisson_matrix(x)));
        }
        const std::size_t min_corank = *std::min_element(coranks.begin(), coranks.end());
        const std::size_t agreement =
            static_cast<std::size_t>(std::count(coranks.begin(), coranks.end(), min_corank));
        out.index = min_corank;
        out.stability = {agreement, trials, height, agreement + 1 >= trials};
        if (out.stability.stable) return out;
        height *= 2;
    }
    return out;
}

/*
 * Weight of a linear semi-invariant: chi with [u, e] = chi(u) e for all u,
 * reported as the vector (chi(e_0), ..., chi(e_{n-1})); nullopt when e does
 * not span a one-dimensional ideal. A successful detection is re-verified
 * as the kernel membership e in Ker(A_x - (<e,x>/<e,a>) A_a) at three
 * sampled pairs.
 */
inline std::optional<std::vector<Rational>> linear_semi_invariant_weight(const LieAlgebra& g,
                                                                          const std::vector<Rational>& e) {
    const std::size_t n = g.dim();
    if (e.size() != n) throw domain_error("linear_semi_invariant_weight: wrong vector length");
    std::size_t lead = n;
    for (std::size_t i = 0; i < n; ++i)
        if (!e[i].is_zero()) {
            lead = i;
            break;
        }
    if (lead == n) throw domain_error("linear_semi_invariant_weight: zero vector");

    std::vector<Rational> chi(n, Rational(0));
    std::vector<Rational> basis_u(n, Rational(0));
    for (std::size_t u = 0; u < n; ++u) {
        basis_u[u] = Rational(1);
        const auto w = g.bracket(basis_u, e);
        basis_u[u] = Rational(0);
        const Rational factor = w[lead] / e[lead];
        for (std::size_t i = 0; i < n; ++i)
            if (w[i] != factor * e[i]) return std::nullopt;
        chi[u] = factor;
    }

    // Poisson-pencil identity for semi-invariants, verified at sampled pairs
    std::mt19937_64 rng(0x3c6ef372fe94f82bull);
    int checked = 0;
    for (int iter = 0; checked < 3; ++iter) {
        if (iter > 1000) throw internal_error("linear_semi_invariant_weight: cannot sample <e, a> != 0");
        const auto x = sample_vector(n, 7, rng);
        const auto a = sample_vector(n, 7, rng);
        Rational ex(0), ea(0);
        for (std::size_t i = 0; i < n; ++i) {
            ex += e[i] * x[i];
            ea += e[i] * a[i];
        }
        if (ea.is_zero()) continue;
        const RMatrix m = g.poisson_matrix(x) - (ex / ea) * g.poisson_matrix(a);
        for (const auto& c : m.apply(e))
            if (!c.is_zero()) throw internal_error("linear_semi_invariant_weight: pencil identity failed");
        ++checked;
    }
    return chi;
}

/*
 * For a known linear characteristic number lambda(x) = <e,x>/<e,a>:
 * <d lambda, a> = 1 with d lambda = e/<e,a>, and d lambda lies in
 * Ker(A_x - lambda(x) A_a) at sampled points.
 */
inline bool eigen_gradient_checks(const LieAlgebra& g, const std::vector<Rational>& e,
                                  const std::vector<Rational>& a) {
    const std::size_t n = g.dim();
    if (e.size() != n || a.size() != n) throw domain_error("eigen_gradient_checks: wrong vector length");
    Rational ea(0);
    for (std::size_t i = 0; i < n; ++i) ea += e[i] * a[i];
    if (ea.is_zero()) throw domain_error("eigen_gradient_checks: <e, a> = 0");
    std::vector<Rational> dlambda(n);
    for (std::size_t i = 0; i < n; ++i) dlambda[i] = e[i] / ea;
    Rational pairing(0);
    for (std::size_t i = 0; i < n; ++i) pairing += dlambda[i] * a[i];
    if (!pairing.is_one()) return false;

    const RMatrix poisson_a = g.poisson_matrix(a);
    std::mt19937_64 rng(0xa54ff53a5f1d36f1ull);
    for (int checked = 0; checked < 3; ++checked) {
        const auto x = sample_vector(n, 7, rng);
        Rational ex(0);
        for (std::size_t i = 0; i < n; ++i) ex += e[i] * x[i];
        const Rational lambda = ex / ea;
        const RMatrix m = g.poisson_matrix(x) - lambda * poisson_a;
        for (const auto& c : m.apply(dlambda))
            if (!c.is_zero()) return false;
    }
    return true;
}

struct LinePolynomialReport {
    UniPoly q;                                      // monic
    std::vector<std::pair<UniPoly, int>> factors;   // canonical order
};

/*
 * Fundamental semi-invariant restricted to the line x - lambda a: the monic
 * gcd of the Pfaffians of all diagonal minors of order rk P of A_{x-la}.
 * Its roots are the characteristic numbers of the pair (x, a), with
 * multiplicities.
 */
inline LinePolynomialReport fundamental_semiinvariant_on_line(const LieAlgebra& g,
                                                              const std::vector<Rational>& x,
                                                              const std::vector<Rational>& a,
                                                              std::size_t max_dim = 0) {
    const SkewPencil line(g.poisson_matrix(x), -g.poisson_matrix(a));  // A + l*(-B) = A_{x - l a}
    LinePolynomialReport report;
    report.q = pfaffian_minor_gcd(line, max_dim);
    if (report.q.degree() > 0) report.factors = factor_irreducible(report.q);
    return report;
}

}  // namespace jk

#endif
