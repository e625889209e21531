#ifndef JK_FACTOR_HPP
#define JK_FACTOR_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "jk/errors.hpp"
#include "jk/poly.hpp"
#include "jk/rational.hpp"

namespace jk {

/*
 * Univariate factorization over the rationals: Yun squarefree decomposition,
 * then Zassenhaus on each squarefree part (reduction mod a prime,
 * distinct-degree and equal-degree splitting, linear multifactor Hensel
 * lifting, subset recombination).
 */

namespace detail {

// ---- integer polynomials (dense, lowest degree first) ----
using ZPoly = std::vector<mpz_class>;

inline void zp_strip(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int zp_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline ZPoly zp_sub(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    zp_strip(a);
    return a;
}

inline mpz_class zp_content(const ZPoly& f) {
    mpz_class g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Exact division of integer polynomials; divisor must be monic here.
inline bool zp_divide_monic(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    ZPoly rem = a;
    zp_strip(rem);
    quot.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    const int db = zp_deg(b);
    while (zp_deg(rem) >= db) {
        const int shift = zp_deg(rem) - db;
        mpz_class f = rem.back();
        quot[shift] = f;
        for (int i = 0; i <= db; ++i) rem[i + shift] -= f * b[i];
        zp_strip(rem);
    }
    return rem.empty();
}

// ---- polynomials modulo m (coefficients in [0, m)) ----
struct ModPoly {
    ZPoly c;
};

inline void pm_reduce(ZPoly& f, const mpz_class& m) {
    for (auto& x : f) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    }
    zp_strip(f);
}

inline ZPoly pm_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r = zp_mul(a, b);
    pm_reduce(r, m);
    return r;
}

inline ZPoly pm_sub(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly r = zp_sub(a, b);
    pm_reduce(r, m);
    return r;
}

inline mpz_class mod_inv(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw internal_error("factor: non-invertible element in modular arithmetic");
    return r;
}

// Division with remainder mod m; leading coefficient of b must be invertible.
inline void pm_divmod(const ZPoly& a, const ZPoly& b, const mpz_class& m, ZPoly& q, ZPoly& r) {
    r = a;
    pm_reduce(r, m);
    q.clear();
    const int db = zp_deg(b);
    if (db < 0) throw domain_error("factor: modular division by zero");
    const mpz_class inv = mod_inv(b.back(), m);
    if (zp_deg(r) >= db) q.assign(zp_deg(r) - db + 1, mpz_class(0));
    while (zp_deg(r) >= db) {
        const int shift = zp_deg(r) - db;
        mpz_class f = (r.back() * inv) % m;
        q[shift] = f;
        for (int i = 0; i <= db; ++i) {
            r[i + shift] -= f * b[i];
        }
        pm_reduce(r, m);
    }
}

inline ZPoly pm_mod(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    ZPoly q, r;
    pm_divmod(a, b, m, q, r);
    return r;
}

inline ZPoly pm_make_monic(ZPoly f, const mpz_class& m) {
    pm_reduce(f, m);
    if (f.empty()) return f;
    const mpz_class inv = mod_inv(f.back(), m);
    for (auto& c : f) c = (c * inv) % m;
    return f;
}

// gcd mod prime p, monic result.
inline ZPoly pm_gcd(ZPoly a, ZPoly b, const mpz_class& p) {
    pm_reduce(a, p);
    pm_reduce(b, p);
    while (!b.empty()) {
        ZPoly r = pm_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pm_make_monic(a, p);
}

// Extended Euclid mod prime p: returns (g, s, t) with s*a + t*b = g, g monic.
inline void pm_extgcd(const ZPoly& a, const ZPoly& b, const mpz_class& p, ZPoly& g, ZPoly& s, ZPoly& t) {
    ZPoly r0 = a, r1 = b;
    pm_reduce(r0, p);
    pm_reduce(r1, p);
    ZPoly s0{mpz_class(1)}, s1{}, t0{}, t1{mpz_class(1)};
    while (!r1.empty()) {
        ZPoly q, r;
        pm_divmod(r0, r1, p, q, r);
        r0 = std::move(r1);
        r1 = std::move(r);
        ZPoly s2 = pm_sub(s0, pm_mul(q, s1, p), p);
        s0 = std::move(s1);
        s1 = std::move(s2);
        ZPoly t2 = pm_sub(t0, pm_mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) throw internal_error("factor: extgcd of zero polynomials");
    const mpz_class inv = mod_inv(r0.back(), p);
    auto scale = [&](ZPoly& f) {
        for (auto& c : f) c = (c * inv) % p;
        zp_strip(f);
    };
    scale(r0);
    scale(s0);
    scale(t0);
    g = std::move(r0);
    s = std::move(s0);
    t = std::move(t0);
}

inline ZPoly pm_powmod(ZPoly base, mpz_class e, const ZPoly& mod, const mpz_class& p) {
    base = pm_mod(base, mod, p);
    ZPoly acc{mpz_class(1)};
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = pm_mod(pm_mul(acc, base, p), mod, p);
        base = pm_mod(pm_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return acc;
}

inline ZPoly pm_derivative(const ZPoly& f, const mpz_class& m) {
    if (f.size() <= 1) return {};
    ZPoly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = (mpz_class(static_cast<unsigned long>(i)) * f[i]) % m;
    zp_strip(r);
    return r;
}

// Distinct-degree factorization of a monic squarefree f mod p.
// Returns pairs (product of irreducible factors of degree d, d).
inline std::vector<std::pair<ZPoly, int>> pm_ddf(const ZPoly& f, const mpz_class& p) {
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly rem = f;
    ZPoly h{mpz_class(0), mpz_class(1)};  // x
    int d = 0;
    while (zp_deg(rem) > 0) {
        ++d;
        if (2 * d > zp_deg(rem)) {
            out.emplace_back(rem, zp_deg(rem));
            break;
        }
        h = pm_powmod(h, p, rem, p);
        ZPoly hx = pm_sub(h, ZPoly{mpz_class(0), mpz_class(1)}, p);
        ZPoly g = pm_gcd(hx, rem, p);
        if (zp_deg(g) > 0) {
            out.emplace_back(g, d);
            ZPoly q, r;
            pm_divmod(rem, g, p, q, r);
            rem = pm_make_monic(q, p);
            h = pm_mod(h, rem, p);
        }
    }
    return out;
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
// irreducible factors of degree d, p an odd prime.
inline void pm_edf(const ZPoly& f, int d, const mpz_class& p, std::mt19937_64& rng, std::vector<ZPoly>& out) {
    const int n = zp_deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
    const mpz_class e = (pd - 1) / 2;
    for (;;) {
        ZPoly r(n);
        for (auto& c : r) {
            mpz_class v(static_cast<unsigned long>(rng()));
            c = v % p;
        }
        zp_strip(r);
        if (zp_deg(r) < 1) continue;
        ZPoly g = pm_gcd(r, f, p);
        if (zp_deg(g) == 0) {
            ZPoly s = pm_powmod(r, e, f, p);
            s = pm_sub(s, ZPoly{mpz_class(1)}, p);
            g = pm_gcd(s, f, p);
        }
        if (zp_deg(g) > 0 && zp_deg(g) < n) {
            ZPoly q, rem;
            pm_divmod(f, g, p, q, rem);
            pm_edf(g, d, p, rng, out);
            pm_edf(pm_make_monic(q, p), d, p, rng, out);
            return;
        }
    }
}

inline void symmetric_lift(ZPoly& f, const mpz_class& m) {
    const mpz_class half = m / 2;
    for (auto& c : f)
        if (c > half) c -= m;
    zp_strip(f);
}

// Linear multifactor Hensel: f monic over Z, f = prod(u_i) mod p with u_i
// monic pairwise coprime; lifts the u_i to a factorization mod p^l.
inline void hensel_lift(const ZPoly& f, std::vector<ZPoly>& u, const mpz_class& p, unsigned l) {
    const std::size_t r = u.size();
    if (r == 1) {
        u[0] = f;  // monic: the lift of a trivial factorization is f itself
        mpz_class pl;
        mpz_pow_ui(pl.get_mpz_t(), p.get_mpz_t(), l);
        pm_reduce(u[0], pl);
        return;
    }
    // Bezout data mod p: w_i = (prod_{t != i} u_t)^{-1} mod u_i
    std::vector<ZPoly> w(r);
    for (std::size_t i = 0; i < r; ++i) {
        ZPoly v{mpz_class(1)};
        for (std::size_t t = 0; t < r; ++t)
            if (t != i) v = pm_mod(pm_mul(v, u[t], p), u[i], p);
        ZPoly g, s, tt;
        pm_extgcd(v, u[i], p, g, s, tt);
        if (zp_deg(g) != 0) throw internal_error("factor: modular factors not coprime");
        w[i] = pm_mod(s, u[i], p);
    }
    mpz_class pj = p;  // current modulus p^j
    for (unsigned j = 1; j < l; ++j) {
        const mpz_class pj1 = pj * p;
        ZPoly prod{mpz_class(1)};
        for (const auto& ui : u) prod = pm_mul(prod, ui, pj1);
        ZPoly e = zp_sub(f, prod);
        pm_reduce(e, pj1);
        for (auto& c : e) {
            mpz_class q, rem;
            mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), pj.get_mpz_t());
            if (rem != 0) throw internal_error("factor: Hensel defect not divisible by modulus");
            c = q;
        }
        pm_reduce(e, p);
        for (std::size_t i = 0; i < r; ++i) {
            ZPoly delta = pm_mod(pm_mul(e, w[i], p), u[i], p);
            for (std::size_t t = 0; t < delta.size(); ++t) u[i][t] = (u[i][t] + pj * delta[t]) % pj1;
            zp_strip(u[i]);
        }
        pj = pj1;
    }
}

// Factors a monic squarefree integer polynomial into monic irreducible
// integer polynomials (Zassenhaus).
inline std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f, std::mt19937_64& rng) {
    const int n = zp_deg(f);
    if (n <= 0) throw internal_error("factor: expected positive degree");
    if (n == 1) return {f};

    // prime selection: first few odd primes keeping f squarefree mod p;
    // among them prefer the one with the fewest modular factors
    struct Candidate {
        mpz_class p;
        std::vector<std::pair<ZPoly, int>> ddf;
        int count;
    };
    std::vector<Candidate> cands;
    mpz_class p = 3;
    while (cands.size() < 3) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        ZPoly fp = f;
        pm_reduce(fp, p);
        if (zp_deg(fp) != n) continue;  // p divides the leading coefficient (monic: impossible)
        fp = pm_make_monic(fp, p);
        ZPoly d = pm_derivative(fp, p);
        if (d.empty()) continue;
        if (zp_deg(pm_gcd(fp, d, p)) != 0) continue;  // not squarefree mod p
        Candidate c;
        c.p = p;
        c.ddf = pm_ddf(fp, p);
        c.count = 0;
        for (const auto& [g, dd] : c.ddf) c.count += zp_deg(g) / dd;
        if (c.count == 1) return {f};  // irreducible mod p, hence over Z
        cands.push_back(std::move(c));
    }
    auto best = std::min_element(cands.begin(), cands.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.count < b.count; });
    p = best->p;

    std::vector<ZPoly> modular;
    for (const auto& [g, d] : best->ddf) pm_edf(g, d, p, rng, modular);

    // Mignotte-style bound on coefficients of any monic factor: sqrt(n+1) * 2^n * max|f_i|
    mpz_class a = 0;
    for (const auto& c : f) {
        mpz_class ac = abs(c);
        if (ac > a) a = ac;
    }
    mpz_class bound = a + 1;
    mpz_class sq;
    mpz_sqrt(sq.get_mpz_t(), mpz_class(n + 1).get_mpz_t());
    bound *= (sq + 1);
    bound <<= static_cast<unsigned>(n);
    const mpz_class target = 2 * bound + 1;
    unsigned l = 1;
    mpz_class pl = p;
    while (pl < target) {
        pl *= p;
        ++l;
    }
    hensel_lift(f, modular, p, l);

    // subset recombination
    std::vector<ZPoly> result;
    ZPoly rem_poly = f;
    std::vector<std::size_t> live(modular.size());
    for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

    std::size_t s = 1;
    while (2 * s <= live.size()) {
        bool found = false;
        std::vector<std::size_t> comb(s);
        for (std::size_t i = 0; i < s; ++i) comb[i] = i;
        for (;;) {
            ZPoly cand{mpz_class(1)};
            for (auto ci : comb) cand = pm_mul(cand, modular[live[ci]], pl);
            symmetric_lift(cand, pl);
            ZPoly quot;
            if (static_cast<int>(cand.size()) - 1 <= zp_deg(rem_poly) && zp_divide_monic(rem_poly, cand, quot)) {
                result.push_back(cand);
                rem_poly = quot;
                std::vector<std::size_t> next_live;
                for (std::size_t i = 0, ci = 0; i < live.size(); ++i) {
                    if (ci < comb.size() && comb[ci] == i) {
                        ++ci;
                        continue;
                    }
                    next_live.push_back(live[i]);
                }
                live = std::move(next_live);
                found = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && comb[k - 1] == live.size() - (s - k) - 1) --k;
            if (k == 0) break;
            ++comb[k - 1];
            for (std::size_t i = k; i < s; ++i) comb[i] = comb[i - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zp_deg(rem_poly) > 0) result.push_back(rem_poly);
    return result;
}

inline ZPoly unipoly_to_monic_integer(const UniPoly& f, mpz_class& scale_out) {
    // f monic over Q; b^n f(x/b) with b = lcm of denominators is monic with
    // integer coefficients f_i b^(n-i).
    mpz_class b = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(b.get_mpz_t(), b.get_mpz_t(), c.denominator().get_mpz_t());
    const int n = f.degree();
    ZPoly out(n + 1);
    out[n] = 1;
    mpz_class bp = 1;  // b^(n-1-i)
    for (int i = n - 1; i >= 0; --i) {
        const Rational c = f.coeff(i);
        mpz_class num = c.numerator() * (b / c.denominator());  // f_i * b
        out[i] = num * bp;
        bp *= b;
    }
    scale_out = b;
    return out;
}

inline UniPoly monic_integer_to_unipoly(const ZPoly& g, const mpz_class& b) {
    // inverse substitution: monic integer G(x) -> monic rational G(b x) / b^deg
    const int d = zp_deg(g);
    std::vector<Rational> coeffs(d + 1);
    mpz_class bp = 1;  // b^i
    mpz_class bd = 1;
    for (int i = 0; i < d; ++i) bd *= b;
    for (int i = 0; i <= d; ++i) {
        coeffs[i] = Rational(g[i] * bp, bd);
        bp *= b;
    }
    return UniPoly(std::move(coeffs));
}

}  // namespace detail

// Yun squarefree decomposition of a nonzero polynomial: returns pairs
// (monic squarefree part, multiplicity) with distinct multiplicities.
inline std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly g = UniPoly::gcd(f, fp);
    UniPoly c = UniPoly::exact_div(f, g);
    UniPoly d = UniPoly::exact_div(fp, g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = UniPoly::gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a.monic(), i);
        c = UniPoly::exact_div(c, a);
        d = UniPoly::exact_div(d, a) - c.derivative();
        ++i;
    }
    return out;
}

/*
 * Complete factorization over Q: monic irreducible factors with
 * multiplicities, in canonical order (degree, then coefficients
 * lexicographic). The leading coefficient times the product of
 * factors^multiplicities reconstructs the input.
 */
inline std::vector<std::pair<UniPoly, int>> factor_irreducible(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("factor_irreducible: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);  // deterministic splitting
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        mpz_class b;
        detail::ZPoly fz = detail::unipoly_to_monic_integer(part, b);
        for (const auto& g : detail::factor_monic_squarefree(fz, rng)) {
            out.emplace_back(detail::monic_integer_to_unipoly(g, b), mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return compare_poly(a.first, b.first) < 0; });
    return out;
}

}  // namespace jk

#endif
