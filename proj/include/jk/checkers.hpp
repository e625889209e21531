#ifndef JK_CHECKERS_HPP
#define JK_CHECKERS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jk/constructors.hpp"
#include "jk/jk_type.hpp"

namespace jk {

/*
 * Decision procedures for realizability of an algebraic type by a Lie
 * algebra. Every "realizable" verdict carries an executable plan of
 * constructor calls whose direct sum reproduces the type; "impossible"
 * cites the obstruction theorem; "unknown" marks the open region between
 * the constructive and obstructive results.
 */

inline bool tuple_has_unique_maximum(const std::vector<int>& sizes) {
    if (sizes.empty()) throw domain_error("tuple_has_unique_maximum: empty tuple");
    if (!std::is_sorted(sizes.rbegin(), sizes.rend()))
        throw domain_error("tuple_has_unique_maximum: tuple must be descending");
    return sizes.size() == 1 || sizes[0] > sizes[1];
}

struct PlanStep {
    enum class Family { kronecker, jordan, central, kron3, mixed };
    Family family;
    int m = 0;        // kronecker / mixed parameter
    int centers = 0;  // central parameter
    std::vector<std::vector<int>> tuples;
};

enum class Realizability { realizable, impossible, unknown };

struct Verdict {
    Realizability status;
    std::string reason;          // theorem citation
    std::vector<PlanStep> plan;  // nonempty iff realizable
};

namespace detail_check {

// n-list of jordan_tuple_algebra realizing a unique-maximum tuple
inline std::vector<int> jordan_ns_for(const std::vector<int>& tuple) {
    std::vector<int> ns;
    if (tuple.size() == 1 && tuple[0] == 2) return ns;  // J(2) needs no inner pairs
    ns.push_back(tuple[0] / 2 - 1);
    for (std::size_t i = 1; i < tuple.size(); ++i) ns.push_back(tuple[i] / 2);
    if (ns[0] < 1 || !std::is_sorted(ns.rbegin(), ns.rend()))
        throw internal_error("jordan_ns_for: tuple lacks a unique maximum");
    return ns;
}

inline std::vector<std::pair<Rational, Rational>> distinct_pairs(std::size_t count) {
    std::vector<std::pair<Rational, Rational>> pairs;
    for (std::size_t t = 0; t < count; ++t) pairs.emplace_back(Rational(1), Rational(static_cast<long>(t)));
    return pairs;
}

}  // namespace detail_check

inline ExpectedRealization run_plan_step(const PlanStep& step) {
    switch (step.family) {
        case PlanStep::Family::kronecker:
            return kronecker_algebra(step.m);
        case PlanStep::Family::jordan:
            return jordan_tuple_algebra(detail_check::jordan_ns_for(step.tuples.at(0)));
        case PlanStep::Family::central:
            return central_jordan_algebra(step.tuples, step.centers);
        case PlanStep::Family::kron3:
            return kron3_algebra(step.tuples, detail_check::distinct_pairs(step.tuples.size()));
        case PlanStep::Family::mixed:
            return mixed_algebra(step.m, step.tuples);
    }
    throw domain_error("run_plan_step: unknown family");
}

// Direct sum of all plan steps, with the combined expected type.
inline ExpectedRealization execute_plan(const std::vector<PlanStep>& plan) {
    if (plan.empty()) throw domain_error("execute_plan: empty plan");
    ExpectedRealization acc = run_plan_step(plan[0]);
    for (std::size_t i = 1; i < plan.size(); ++i) {
        ExpectedRealization next = run_plan_step(plan[i]);
        acc.algebra = direct_sum(acc.algebra, next.algebra);
        acc.expected = algebraic_union(acc.expected, next.expected);
        acc.eigen_directions.clear();  // directions are not tracked through sums
    }
    return acc;
}

inline Verdict realizability_verdict(const AlgebraicType& type) {
    AlgebraicType t = type;
    t.canonicalize();
    const std::size_t count1 = static_cast<std::size_t>(std::count(t.kronecker.begin(), t.kronecker.end(), 1));
    const std::size_t count3 = static_cast<std::size_t>(std::count(t.kronecker.begin(), t.kronecker.end(), 3));

    std::vector<std::vector<int>> mm_tuples, um_tuples;
    for (const auto& tuple : t.tuples)
        (tuple_has_unique_maximum(tuple) ? um_tuples : mm_tuples).push_back(tuple);
    std::size_t unique_mm = 0;
    for (const auto& tuple : mm_tuples)
        if (std::count(t.tuples.begin(), t.tuples.end(), tuple) == 1) ++unique_mm;
    std::size_t sum_k = 0;
    for (int size : t.kronecker) sum_k += static_cast<std::size_t>((size + 1) / 2);

    Verdict v;
    auto add_jordan_steps = [&](std::vector<PlanStep>& plan) {
        for (const auto& tuple : um_tuples)
            plan.push_back({PlanStep::Family::jordan, 0, 0, {tuple}});
    };

    // pure Kronecker: always realizable blockwise
    if (t.tuples.empty() && !t.kronecker.empty()) {
        v.status = Realizability::realizable;
        v.reason = "Thm KronInv + Thm Sum";
        for (int size : t.kronecker) v.plan.push_back({PlanStep::Family::kronecker, (size - 1) / 2, 0, {}});
        return v;
    }

    // (a) no Kronecker blocks: the Jordan case
    if (t.kronecker.empty()) {
        if (mm_tuples.empty() && !t.tuples.empty()) {
            v.status = Realizability::realizable;
            v.reason = "Thm JordanCase";
            add_jordan_steps(v.plan);
        } else {
            v.status = Realizability::impossible;
            v.reason = "Thm JordanCase";
        }
        return v;
    }

    // (b) a Kronecker 3x3 block or at least two trivial blocks: anything goes
    if (count3 >= 1) {
        v.status = Realizability::realizable;
        v.reason = "Thm Kron3";
        v.plan.push_back({PlanStep::Family::kron3, 0, 0, t.tuples});
        bool skipped_one_3 = false;
        for (int size : t.kronecker) {
            if (size == 3 && !skipped_one_3) {
                skipped_one_3 = true;
                continue;
            }
            v.plan.push_back({PlanStep::Family::kronecker, (size - 1) / 2, 0, {}});
        }
        return v;
    }
    if (count1 >= 2) {
        v.status = Realizability::realizable;
        v.reason = "Thm TwoTrivKronJordRealLie";
        v.plan.push_back({PlanStep::Family::central, 0, 2, t.tuples});
        std::size_t skipped_ones = 0;
        for (int size : t.kronecker) {
            if (size == 1 && skipped_ones < 2) {
                ++skipped_ones;
                continue;
            }
            v.plan.push_back({PlanStep::Family::kronecker, (size - 1) / 2, 0, {}});
        }
        return v;
    }

    // (c) exactly one trivial block and nothing else
    if (count1 == 1 && t.kronecker.size() == 1) {
        if (mm_tuples.size() <= 1) {
            v.status = Realizability::realizable;
            v.reason = "Thm TrivialKron";
            if (!mm_tuples.empty())
                v.plan.push_back({PlanStep::Family::central, 0, 1, {mm_tuples[0]}});
            else
                v.plan.push_back({PlanStep::Family::kronecker, 0, 0, {}});
            add_jordan_steps(v.plan);
        } else {
            v.status = Realizability::impossible;
            v.reason = "Thm ObstOneKron";
        }
        return v;
    }

    // (d) no 3x3 blocks, at most one trivial block, some block of size >= 5
    if (mm_tuples.size() <= sum_k) {
        v.status = Realizability::realizable;
        v.reason = "Thm RealOneKronSeveralEigen";
        // greedy: biggest tuples into the biggest blocks, d <= m+1 per block
        std::sort(mm_tuples.begin(), mm_tuples.end(), [](const auto& a, const auto& b) {
            int sa = 0, sb = 0;
            for (int x : a) sa += x;
            for (int x : b) sb += x;
            return sa > sb;
        });
        std::vector<int> blocks = t.kronecker;
        std::sort(blocks.rbegin(), blocks.rend());
        std::size_t next_tuple = 0;
        for (int size : blocks) {
            const int m = (size - 1) / 2;
            std::vector<std::vector<int>> assigned;
            while (next_tuple < mm_tuples.size() && assigned.size() < static_cast<std::size_t>(m) + 1)
                assigned.push_back(mm_tuples[next_tuple++]);
            if (assigned.empty())
                v.plan.push_back({PlanStep::Family::kronecker, m, 0, {}});
            else if (m == 0)
                v.plan.push_back({PlanStep::Family::central, 0, 1, assigned});
            else
                v.plan.push_back({PlanStep::Family::mixed, m, 0, assigned});
        }
        add_jordan_steps(v.plan);
        return v;
    }
    if (unique_mm > sum_k) {
        v.status = Realizability::impossible;
        v.reason = "Thm FinalObs";
        return v;
    }
    v.status = Realizability::unknown;
    v.reason = "open problem (gap between Thm RealOneKronSeveralEigen and Thm FinalObs)";
    return v;
}

struct Ind1Shape {
    bool consistent;
    std::string detail;
};

/*
 * Shape predicate for index-1 algebras without proper semi-invariants with
 * one Kronecker (2k-1)x(2k-1) block: either no Jordan tuples, or exactly k
 * equal tuples (whose common half-size total is the multiplicity of the
 * invariant in the fundamental semi-invariant).
 */
inline Ind1Shape ind1_shape_check(const AlgebraicType& type) {
    if (type.kronecker.size() != 1)
        throw domain_error("ind1_shape_check: exactly one Kronecker size required");
    const int k = (type.kronecker[0] + 1) / 2;
    if (type.tuples.empty()) return {true, "no Jordan tuples"};
    for (std::size_t i = 1; i < type.tuples.size(); ++i)
        if (type.tuples[i] != type.tuples[0]) return {false, "Jordan tuples are not all equal"};
    if (type.tuples.size() != static_cast<std::size_t>(k))
        return {false, "expected " + std::to_string(k) + " equal tuples, found " +
                           std::to_string(type.tuples.size())};
    int d = 0;
    for (int v : type.tuples[0]) d += v / 2;
    return {true, std::to_string(k) + " equal tuples with half-size total " + std::to_string(d)};
}

}  // namespace jk

#endif
