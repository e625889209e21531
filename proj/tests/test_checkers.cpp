#include <catch_amalgamated.hpp>

#include <random>

#include "jk/checkers.hpp"
#include "jk/lie_invariants.hpp"

using namespace jk;

namespace {

AlgebraicType at(std::vector<std::vector<int>> tuples, std::vector<int> kron) {
    return AlgebraicType(std::move(tuples), std::move(kron));
}

// soundness: a realizable verdict must execute to an algebra of the stated type
void require_sound(const AlgebraicType& type, const Verdict& v, unsigned long seed = 0) {
    REQUIRE(v.status == Realizability::realizable);
    REQUIRE(!v.plan.empty());
    const ExpectedRealization realized = execute_plan(v.plan);
    REQUIRE(!realized.algebra.jacobi_check().has_value());
    REQUIRE(realized.expected == type);
    const auto generic = generic_jk_invariants(realized.algebra, seed);
    REQUIRE(generic.stability.stable);
    REQUIRE(generic.algebraic == type);
}

AlgebraicType random_type(std::mt19937_64& rng, std::size_t max_dim = 11) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> kron;
    std::size_t dim = 0;
    while (true) {
        const int what = static_cast<int>(rng() % 3);
        if (what == 0) {
            const int size = 2 * static_cast<int>(rng() % 3) + 1;
            if (dim + size > max_dim) break;
            kron.push_back(size);
            dim += size;
        } else {
            std::vector<int> tuple;
            const int s = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < s; ++i) tuple.push_back(2 * (1 + static_cast<int>(rng() % 2)));
            std::size_t tsize = 0;
            for (int v : tuple) tsize += v;
            if (dim + tsize > max_dim) break;
            tuples.push_back(tuple);
            dim += tsize;
        }
        if (rng() % 3 == 0) break;
    }
    if (dim == 0) kron.push_back(1);
    return at(tuples, kron);
}

}  // namespace

TEST_CASE("unique maximum predicate") {
    REQUIRE(tuple_has_unique_maximum({4, 2}));
    REQUIRE(!tuple_has_unique_maximum({2, 2}));
    REQUIRE(tuple_has_unique_maximum({6}));
    REQUIRE(!tuple_has_unique_maximum({4, 4, 2}));
    REQUIRE_THROWS_AS(tuple_has_unique_maximum({}), domain_error);
    REQUIRE_THROWS_AS(tuple_has_unique_maximum({2, 4}), domain_error);
}

TEST_CASE("verdicts on the named obstruction examples") {
    SECTION("{(2,2)}: impossible in the Jordan case") {
        const Verdict v = realizability_verdict(at({{2, 2}}, {}));
        REQUIRE(v.status == Realizability::impossible);
        REQUIRE(v.reason == "Thm JordanCase");
    }
    SECTION("{(2,2),(2,2),1}: one trivial block cannot carry two multiple-maxima tuples") {
        const Verdict v = realizability_verdict(at({{2, 2}, {2, 2}}, {1}));
        REQUIRE(v.status == Realizability::impossible);
        REQUIRE(v.reason == "Thm ObstOneKron");
    }
    SECTION("{(2,2),(4,4),(6,6),(2,2,2),5}: four unique multiple-maxima tuples exceed k=3") {
        const Verdict v = realizability_verdict(at({{2, 2}, {4, 4}, {6, 6}, {2, 2, 2}}, {5}));
        REQUIRE(v.status == Realizability::impossible);
        REQUIRE(v.reason == "Thm FinalObs");
    }
    SECTION("{(2,2),(4,2),3}: realizable through the 3x3 block") {
        const AlgebraicType t = at({{2, 2}, {4, 2}}, {3});
        const Verdict v = realizability_verdict(t);
        require_sound(t, v);
    }
    SECTION("{(2,2) x4, 5}: the open region") {
        const Verdict v = realizability_verdict(at({{2, 2}, {2, 2}, {2, 2}, {2, 2}}, {5}));
        REQUIRE(v.status == Realizability::unknown);
    }
}

TEST_CASE("verdicts on realizable families") {
    SECTION("pure Jordan with unique maxima") {
        const AlgebraicType t = at({{4}, {6, 2}}, {});
        require_sound(t, realizability_verdict(t));
    }
    SECTION("pure Kronecker") {
        const AlgebraicType t = at({}, {1, 3, 5});
        require_sound(t, realizability_verdict(t));
    }
    SECTION("one trivial block with one multiple-maxima tuple") {
        const AlgebraicType t = at({{2, 2}, {4}}, {1});
        require_sound(t, realizability_verdict(t));
    }
    SECTION("two trivial blocks with any tuples") {
        const AlgebraicType t = at({{2, 2}, {2, 2}}, {1, 1});
        require_sound(t, realizability_verdict(t));
    }
    SECTION("one K(5) with multiple-maxima tuples within capacity") {
        const AlgebraicType t = at({{2, 2}, {4, 2}}, {5});
        require_sound(t, realizability_verdict(t));
    }
    SECTION("K(5) + K(1) with a multiple-maxima tuple routed to the trivial block") {
        const AlgebraicType t = at({{2, 2}, {2, 2}, {2, 2}, {2, 2}}, {1, 5});
        // capacity k = 3 + 1 = 4 >= 4 multiple-maxima tuples
        require_sound(t, realizability_verdict(t));
    }
}

TEST_CASE("case boundaries") {
    // exactly one trivial block plus a bigger block is the general mixed case,
    // not the single-trivial-block case
    const Verdict v = realizability_verdict(at({{2, 2}, {2, 2}}, {1, 5}));
    REQUIRE(v.status == Realizability::realizable);
    REQUIRE(v.reason == "Thm RealOneKronSeveralEigen");

    // one trivial block decides completely: two multiple-maxima tuples are
    // impossible even when they repeat
    const Verdict c = realizability_verdict(at({{2, 2}, {2, 2}, {2, 2}}, {1}));
    REQUIRE(c.status == Realizability::impossible);
    REQUIRE(c.reason == "Thm ObstOneKron");

    // general mixed case: more multiple-maxima tuples than capacity, but
    // none of them unique: the open region
    const Verdict u = realizability_verdict(at({{2, 2}, {2, 2}, {4, 4}, {4, 4}}, {5}));
    REQUIRE(u.status == Realizability::unknown);

    // more unique multiple-maxima tuples than the total capacity k = 3 + 1
    const Verdict w =
        realizability_verdict(at({{2, 2}, {4, 4}, {6, 6}, {4, 4, 2}, {6, 6, 2}}, {1, 5}));
    REQUIRE(w.status == Realizability::impossible);
    REQUIRE(w.reason == "Thm FinalObs");
}

TEST_CASE("adding a Kronecker 3x3 block always yields realizable") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        AlgebraicType t = random_type(rng);
        t.kronecker.push_back(3);
        t.canonicalize();
        REQUIRE(realizability_verdict(t).status == Realizability::realizable);
    }
}

TEST_CASE("fuzzed verdicts are canonical and sound") {
    std::mt19937_64 rng(91);
    int executed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const AlgebraicType t = random_type(rng);
        const Verdict v = realizability_verdict(t);
        // permuting the multiset does not change the verdict
        AlgebraicType shuffled;
        shuffled.kronecker.assign(t.kronecker.rbegin(), t.kronecker.rend());
        shuffled.tuples.assign(t.tuples.rbegin(), t.tuples.rend());
        shuffled.canonicalize();
        const Verdict v2 = realizability_verdict(shuffled);
        REQUIRE(v.status == v2.status);
        REQUIRE(v.reason == v2.reason);
        if (v.status == Realizability::realizable) {
            REQUIRE(!v.plan.empty());
            if (t.dimension() <= 9 && executed < 6) {
                require_sound(t, v, 7);
                ++executed;
            } else {
                REQUIRE(execute_plan(v.plan).expected == t);
            }
        }
    }
    REQUIRE(executed > 0);
}

TEST_CASE("index-1 shape predicate") {
    SECTION("{(2),(2),3}: k = 2 equal tuples") {
        REQUIRE(ind1_shape_check(at({{2}, {2}}, {3})).consistent);
    }
    SECTION("{(2),3}: one tuple instead of k = 2") {
        REQUIRE(!ind1_shape_check(at({{2}}, {3})).consistent);
    }
    SECTION("{7}: no tuples is consistent") {
        REQUIRE(ind1_shape_check(at({}, {7})).consistent);
    }
    SECTION("unequal tuples are inconsistent") {
        REQUIRE(!ind1_shape_check(at({{2}, {4}}, {3})).consistent);
    }
    SECTION("requires exactly one Kronecker size") {
        REQUIRE_THROWS_AS(ind1_shape_check(at({}, {3, 3})), domain_error);
        REQUIRE_THROWS_AS(ind1_shape_check(at({{2}}, {})), domain_error);
    }
}
