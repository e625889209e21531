// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// exact equality throughout. Exits nonzero if any criterion fails.

#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jk/checkers.hpp"
#include "jk/cli.hpp"
#include "jk/constructors.hpp"
#include "jk/lie_invariants.hpp"

using namespace jk;

namespace {

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw failure(what);
}

std::mt19937_64 acceptance_rng(0xACCE57ull);

JKType random_rational_type(std::mt19937_64& rng, std::size_t max_dim) {
    std::vector<JordanTuple> tuples;
    std::vector<int> kron;
    std::size_t dim = 0;
    std::vector<Rational> used;
    auto fresh_eigen = [&]() {
        for (;;) {
            Rational v(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
            bool seen = false;
            for (const auto& u : used) seen = seen || u == v;
            if (!seen) {
                used.push_back(v);
                return v;
            }
        }
    };
    const int parts = 1 + static_cast<int>(rng() % 4);
    for (int p = 0; p < parts; ++p) {
        if (rng() % 2 == 0) {
            const int size = 2 * static_cast<int>(rng() % 3) + 1;
            if (dim + size > max_dim) continue;
            kron.push_back(size);
            dim += size;
        } else {
            std::vector<int> sizes;
            const int s = 1 + static_cast<int>(rng() % 2);
            std::size_t tsize = 0;
            for (int i = 0; i < s; ++i) {
                const int v = 2 * (1 + static_cast<int>(rng() % 3));
                sizes.push_back(v);
                tsize += v;
            }
            if (dim + tsize > max_dim) continue;
            tuples.emplace_back(sizes, EigenKey::rational(fresh_eigen()));
            dim += tsize;
        }
    }
    if (dim == 0) {
        kron.push_back(1);
        dim = 1;
    }
    return JKType(std::move(tuples), std::move(kron));
}

// the constructor suite of criterion 2, reused by criteria 4-8
std::vector<ExpectedRealization> constructor_suite() {
    std::vector<ExpectedRealization> out;
    for (int m = 0; m <= 3; ++m) out.push_back(kronecker_algebra(m));
    out.push_back(jordan_tuple_algebra({1}));        // tuple (4)
    out.push_back(jordan_tuple_algebra({2, 1}));     // tuple (6,2)
    out.push_back(jordan_tuple_algebra({1, 1, 1}));  // tuple (4,2,2)
    out.push_back(central_jordan_algebra({{2, 2}}, 1));
    out.push_back(central_jordan_algebra({{2}, {2}}, 2));
    out.push_back(kron3_algebra({{2, 2}, {4, 2}}, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}));
    out.push_back(mixed_algebra(2, {{2, 2}, {2, 2}, {2, 2}}));
    return out;
}

void check_dimension_laws(const PencilAnalysis& an, const std::string& context) {
    const std::size_t n = an.n;
    // half the dimension of the Jordan part; equals deg p when every
    // eigenvalue is finite (an infinite eigenvalue escapes the minor gcd)
    std::size_t jordan_half = 0;
    bool has_infinity = false;
    for (const auto& t : an.jordan) {
        jordan_half += static_cast<std::size_t>(t.eigen.degree()) * (t.total_size() / 2);
        has_infinity = has_infinity || t.eigen.is_infinity();
    }
    if (!has_infinity)
        check(static_cast<std::size_t>(an.char_poly.degree()) == jordan_half,
              context + ": char poly degree vs Jordan dimension");
    check(an.core.size() == n - an.rank / 2 - jordan_half, context + ": core dimension law");
    check(an.mantle.size() == n - an.rank / 2 + jordan_half, context + ": mantle dimension law");
    check(an.kronecker_indices.size() == n - an.rank, context + ": block count = corank");
    check(an.type.dimension() == n, context + ": block dimensions sum to n");
}

// ---------------------------------------------------------------------------

void criterion_1_roundtrip() {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const JKType t = random_rational_type(rng, 16);
        const SkewPencil p = build_canonical_pencil(t);
        const RMatrix q = random_unimodular<Rational>(p.dim(), rng);
        const SkewPencil transformed = congruence_transform(p, q);
        const auto an = analyze_pencil(transformed);
        check(an.type == t, "round-trip failed for " + t.str());
        check_dimension_laws(an, "round-trip " + t.str());
    }
}

void criterion_2_constructors() {
    const auto suite = constructor_suite();
    const std::vector<AlgebraicType> expected = {
        AlgebraicType({}, {1}),
        AlgebraicType({}, {3}),
        AlgebraicType({}, {5}),
        AlgebraicType({}, {7}),
        AlgebraicType({{4}}, {}),
        AlgebraicType({{6, 2}}, {}),
        AlgebraicType({{4, 2, 2}}, {}),
        AlgebraicType({{2, 2}}, {1}),
        AlgebraicType({{2}, {2}}, {1, 1}),
        AlgebraicType({{2, 2}, {4, 2}}, {3}),
        AlgebraicType({{2, 2}, {2, 2}, {2, 2}}, {5}),
    };
    check(suite.size() == expected.size(), "suite size");
    for (std::size_t i = 0; i < suite.size(); ++i) {
        check(suite[i].expected == expected[i], "declared type mismatch at entry " + std::to_string(i));
        check(!suite[i].algebra.jacobi_check().has_value(), "Jacobi identity at entry " + std::to_string(i));
        const auto generic = generic_jk_invariants(suite[i].algebra, 0);
        check(generic.stability.stable, "instability at entry " + std::to_string(i));
        check(generic.algebraic == suite[i].expected,
              "computed type differs at entry " + std::to_string(i) + ": " + generic.algebraic.str() +
                  " vs " + suite[i].expected.str());
    }
}

void criterion_3_vorushilov() {
    const auto real = vorushilov_algebra(2, 1);
    check(real.algebra.dim() == 7, "dimension");
    check(!real.algebra.jacobi_check().has_value(), "Jacobi identity");
    const auto generic = generic_jk_invariants(real.algebra, 0);
    check(generic.stability.stable, "instability");
    check(generic.algebraic == AlgebraicType({{2}, {2}}, {3}), "generic type: " + generic.algebraic.str());

    // fundamental semi-invariant on a generic line has degree 2
    std::mt19937_64 rng(7);
    const auto x = sample_vector(7, 9, rng);
    const auto a = sample_vector(7, 9, rng);
    const auto line = fundamental_semiinvariant_on_line(real.algebra, x, a);
    check(line.q.degree() == 2, "fundamental semi-invariant degree: " + std::to_string(line.q.degree()));

    // index-1 bookkeeping: k = (dim + ind)/2 - deg p = (7+1)/2 - 2 = 2
    const auto index = lie_index(real.algebra, 0);
    check(index.stability.stable && index.index == 1, "index");
    const long k = (7 + 1) / 2 - line.q.degree();
    check(k == 2, "k from the degree formula");
    check(generic.algebraic.kronecker == std::vector<int>{2 * static_cast<int>(k) - 1},
          "Kronecker size 2k-1");
    const auto shape = ind1_shape_check(generic.algebraic);
    check(shape.consistent, "index-1 shape: " + shape.detail);
}

void criterion_4_dual_route() {
    // canonical pencils of assorted types
    std::vector<JKType> types;
    types.push_back(JKType({JordanTuple({2}, EigenKey::rational(Rational(3)))}, {1}));
    types.push_back(JKType({JordanTuple({4}, EigenKey::rational(Rational(1))),
                            JordanTuple({2}, EigenKey::rational(Rational(2)))},
                           {}));
    types.push_back(JKType({JordanTuple({2, 2}, EigenKey::rational(Rational(-1, 2)))}, {3, 1}));
    types.push_back(JKType({JordanTuple({2}, EigenKey::of(UniPoly({Rational(-2), Rational(0), Rational(1)})))},
                           {1, 3}));
    for (const auto& t : types) {
        const SkewPencil p = build_canonical_pencil(t);
        const auto an = analyze_pencil(p);
        check(char_poly_pfaffian_gcd(p) == an.char_poly, "canonical pencil " + t.str());
    }
    // one generic pencil per constructed algebra
    std::mt19937_64 rng(11);
    for (const auto& real : constructor_suite()) {
        const std::size_t n = real.algebra.dim();
        const auto x = sample_vector(n, 9, rng);
        const auto a = sample_vector(n, 9, rng);
        const SkewPencil p = real.algebra.lie_pencil(x, a);
        const auto an = analyze_pencil(p);
        check(char_poly_pfaffian_gcd(p) == an.char_poly,
              "constructed pencil of dim " + std::to_string(n));
    }
}

void criterion_5_dimension_laws() {
    std::mt19937_64 rng(13);
    for (const auto& real : constructor_suite()) {
        const std::size_t n = real.algebra.dim();
        const auto x = sample_vector(n, 9, rng);
        const auto a = sample_vector(n, 9, rng);
        const auto an = analyze_pencil(real.algebra.lie_pencil(x, a));
        check_dimension_laws(an, "constructed pencil of dim " + std::to_string(n));
    }
}

void criterion_6_direct_sums() {
    std::vector<ExpectedRealization> pool;
    pool.push_back(kronecker_algebra(0));
    pool.push_back(kronecker_algebra(1));
    pool.push_back(kronecker_algebra(2));
    pool.push_back(jordan_tuple_algebra({1}));
    pool.push_back(jordan_tuple_algebra({2}));
    pool.push_back(jordan_tuple_algebra({1, 1}));
    pool.push_back(central_jordan_algebra({{2, 2}}, 1));
    pool.push_back(central_jordan_algebra({{2}, {2}}, 2));
    pool.push_back(kron3_algebra({{2}}, {{Rational(1), Rational(0)}}));
    pool.push_back(vorushilov_algebra(2, 1));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto& g1 = pool[rng() % pool.size()];
        const auto& g2 = pool[rng() % pool.size()];
        const LieAlgebra sum = direct_sum(g1.algebra, g2.algebra);
        const auto generic = generic_jk_invariants(sum, 1 + trial);
        check(generic.stability.stable, "unstable sum at trial " + std::to_string(trial));
        check(generic.algebraic == algebraic_union(g1.expected, g2.expected),
              "union mismatch at trial " + std::to_string(trial) + ": " + generic.algebraic.str());
    }
}

void criterion_7_obstructions() {
    const auto impossible = [](const AlgebraicType& t, const std::string& reason) {
        const Verdict v = realizability_verdict(t);
        check(v.status == Realizability::impossible, t.str() + " should be impossible");
        check(v.reason == reason, t.str() + " cited " + v.reason);
    };
    impossible(AlgebraicType({{2, 2}}, {}), "Thm JordanCase");
    impossible(AlgebraicType({{2, 2}, {2, 2}}, {1}), "Thm ObstOneKron");
    impossible(AlgebraicType({{2, 2}, {4, 4}, {6, 6}, {2, 2, 2}}, {5}), "Thm FinalObs");

    const Verdict open_case = realizability_verdict(AlgebraicType({{2, 2}, {2, 2}, {2, 2}, {2, 2}}, {5}));
    check(open_case.status == Realizability::unknown, "open problem case");

    // every type of criterion 2 must come back realizable with a verified plan
    for (const auto& real : constructor_suite()) {
        const Verdict v = realizability_verdict(real.expected);
        check(v.status == Realizability::realizable, real.expected.str() + " should be realizable");
        const ExpectedRealization planned = execute_plan(v.plan);
        check(planned.expected == real.expected, "plan type for " + real.expected.str());
        const auto generic = generic_jk_invariants(planned.algebra, 3);
        check(generic.stability.stable, "plan instability for " + real.expected.str());
        check(generic.algebraic == real.expected, "plan verification for " + real.expected.str());
    }
}

void criterion_8_semi_invariants() {
    std::mt19937_64 rng(19);
    std::size_t directions = 0;
    for (const auto& real : constructor_suite()) {
        for (const auto& dir : real.eigen_directions) {
            ++directions;
            check(linear_semi_invariant_weight(real.algebra, dir.vector).has_value(),
                  dir.description + " is not a semi-invariant");
            std::vector<Rational> a;
            for (;;) {
                a = sample_vector(real.algebra.dim(), 7, rng);
                Rational pairing(0);
                for (std::size_t i = 0; i < a.size(); ++i) pairing += dir.vector[i] * a[i];
                if (!pairing.is_zero()) break;
            }
            check(eigen_gradient_checks(real.algebra, dir.vector, a),
                  dir.description + " fails the gradient identities");
        }
    }
    check(directions >= 8, "too few declared eigen directions");
}

void criterion_9_affine() {
    const std::vector<std::vector<int>> tuples = {{2, 2}, {4}, {2}};
    std::vector<AffineFunc> f(3);
    for (long t = 0; t < 3; ++t) {
        f[t].constant = Rational(t + 1);  // f_t(z) = z + t for t = 1..3
        f[t].gradient = {Rational(1)};
    }
    const std::vector<Rational> d = {Rational(1), Rational(1), Rational(1)};
    const AffineBracketPair pair = affine_pencil_build(tuples, f, d);
    check(!affine_jacobiator_check(pair, {Rational(0), Rational(1), Rational(2)}).has_value(),
          "jacobiator does not vanish");
    std::mt19937_64 rng(23);
    for (int point_trial = 0; point_trial < 3; ++point_trial) {
        std::vector<Rational> point;
        JKType expected;
        for (;;) {
            point = sample_vector(pair.dim, 7, rng);
            try {
                expected = pair.expected_at(point);  // throws when eigenvalues collide badly
            } catch (const domain_error&) {
                continue;
            }
            if (jk_invariants(pair.pencil_at(point)).dimension() != pair.dim) continue;
            break;
        }
        check(jk_invariants(pair.pencil_at(point)) == expected,
              "pointwise invariants at sample " + std::to_string(point_trial));
        check(expected.kronecker_sizes == std::vector<int>(pair.z_count, 1), "trivial blocks count");
    }
}

void criterion_10_substitution() {
    // single-block canonical pencils with B irregular: Jordan infinity blocks
    for (long mu : {1L, 2L, -1L}) {
        for (int size : {2, 4}) {
            const JKType t = JKType({JordanTuple({size}, EigenKey::infinity())}, {});
            const auto an = analyze_pencil(build_canonical_pencil(t), Rational(mu));
            check(an.substituted && an.mu == Rational(mu), "substitution not engaged");
            check(an.type == t, "infinity block of size " + std::to_string(size) + ", mu=" + std::to_string(mu));
        }
        // forced substitution on regular-B blocks must reproduce the eigenvalue
        for (long eigen : {5L, 0L, -2L}) {
            if (eigen == -mu) continue;  // the substitute form would be singular
            const JKType t = JKType({JordanTuple({4}, EigenKey::rational(Rational(eigen)))}, {});
            const auto an = analyze_pencil(build_canonical_pencil(t), Rational(mu));
            check(an.type == t, "eigenvalue " + std::to_string(eigen) + ", mu=" + std::to_string(mu));
            check(an.char_poly == UniPoly::linear_root(Rational(eigen)).pow(2), "char poly");
        }
        const UniPoly quad({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
        const JKType t = JKType({JordanTuple({2}, EigenKey::of(quad))}, {});
        const auto an = analyze_pencil(build_canonical_pencil(t), Rational(mu));
        check(an.type == t, "quadratic factor, mu=" + std::to_string(mu));
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "canonical round-trip under random congruence (50 types, n <= 16)", criterion_1_roundtrip},
        {2, "constructor suite reproduces declared invariants", criterion_2_constructors},
        {3, "vorushilov example: type, semi-invariant degree, index-1 bookkeeping", criterion_3_vorushilov},
        {4, "dual-route characteristic polynomial", criterion_4_dual_route},
        {5, "core/mantle dimension laws and block counting", criterion_5_dimension_laws},
        {6, "direct sums take multiset unions (20 random pairs)", criterion_6_direct_sums},
        {7, "obstruction checkers and verified plans", criterion_7_obstructions},
        {8, "semi-invariant identities for declared eigen directions", criterion_8_semi_invariants},
        {9, "affine pencil: jacobiator and pointwise invariants", criterion_9_affine},
        {10, "eigenvalue remapping under substitute forms (mu = 1, 2, -1)", criterion_10_substitution},
    };
    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string verdict = "PASS";
        std::string detail;
        try {
            criterion.run();
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
            ++failures;
        }
        std::cout << verdict << "  criterion " << criterion.id << ": " << criterion.name;
        if (!detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
