#include <doctest.h>

#include "parith/factor.hpp"
#include "parith/oracle.hpp"
#include "parith/presolve.hpp"

using namespace parith;

TEST_CASE("6 factors into 2 and 3") {
    auto res = factor(6);
    REQUIRE(res.status == FactorStatus::Composite);
    CHECK(res.A * res.B == 6);
    CHECK(((res.A == 2 && res.B == 3) || (res.A == 3 && res.B == 2)));
    CHECK(res.objectives_evaluated <= 2 * 2);
}

TEST_CASE("5 and 7 never yield nontrivial factors") {
    for (int c : {5, 7}) {
        auto res = factor(c);
        CHECK(res.status != FactorStatus::Composite);
    }
}

TEST_CASE("15 either factors correctly or reports the failure") {
    auto res = factor(15);
    if (res.status == FactorStatus::Composite) {
        CHECK(res.A * res.B == 15);
        CHECK(((res.A == 3 && res.B == 5) || (res.A == 5 && res.B == 3)));
    } else {
        CHECK(!res.detail.empty());
    }
}

TEST_CASE("composite results are always verified products") {
    for (int c = 4; c <= 64; ++c) {
        auto res = factor(c);
        auto spec = FactoringSpec::for_integer(c);
        CHECK(res.decisions.size() <= static_cast<std::size_t>(spec.m));
        CHECK(res.objectives_evaluated <= 2 * spec.m);
        if (res.status != FactorStatus::Composite) continue;
        CHECK(res.A * res.B == c);
        CHECK(res.B > 1);
        CHECK(res.B < c);
        CHECK((res.A >> spec.n) == 0);
        CHECK((res.B >> spec.m) == 0);
        CHECK(!trial_division(c).prime);
    }
}

TEST_CASE("the driver is deterministic") {
    for (int c : {6, 15, 21, 29}) {
        auto a = factor(c);
        auto b = factor(c);
        CHECK(a.status == b.status);
        CHECK(a.A == b.A);
        CHECK(a.B == b.B);
        REQUIRE(a.decisions.size() == b.decisions.size());
        for (std::size_t i = 0; i < a.decisions.size(); ++i) {
            CHECK(a.decisions[i].optimum_one == b.decisions[i].optimum_one);
            CHECK(a.decisions[i].optimum_zero == b.decisions[i].optimum_zero);
            CHECK(a.decisions[i].chosen == b.decisions[i].chosen);
        }
    }
}

TEST_CASE("presolve does not change the verdict on small inputs") {
    for (int c = 4; c <= 32; ++c) {
        auto with = factor(c, {true});
        auto without = factor(c, {false});
        CHECK(with.status == without.status);
        CHECK(with.A == without.A);
        CHECK(with.B == without.B);
    }
}

TEST_CASE("deterministic factor points are integral and separable") {
    auto sys = build_factoring(FactoringSpec::for_integer(6));
    auto point = lift(multiplication_assignment(2, 2, 2, 3), sys);
    auto report = classify_solution(point, sys);
    CHECK(report.integral);
    CHECK(report.separability_violations.empty());
}

TEST_CASE("the half-half point of C=5 is not integral") {
    auto sys = build_factoring(FactoringSpec::for_integer(5));
    // Pin A = (1?)b and B = (1?)b half-open: P(A_0)=P(B_0)=1 and the high
    // bits at one half.
    for (auto [lit, num] : {std::pair<Literal, int>{9, 1}, {11, 1}})
        sys.constraints.push_back(
            {{{sys.unknowns.id_of(Requirement{lit}), 1}}, num,
             ConstraintKind::Data});
    for (Literal lit : {10, 12})
        sys.constraints.push_back(
            {{{sys.unknowns.id_of(Requirement{lit}), 1}},
             Rational(1) / 2,
             ConstraintKind::Data});
    auto out = solve_feasibility<Rational>(sys);
    REQUIRE(out.status == LpStatus::Feasible);
    auto report = classify_solution(out.point, sys);
    CHECK(!report.integral);
}

TEST_CASE("sweeping a small range tallies the confusion matrix") {
    auto summary = sweep(4, 16);
    REQUIRE(summary.rows.size() == 13);
    std::int64_t composites = 0;
    for (const SweepRow& row : summary.rows) {
        if (row.oracle_composite) ++composites;
        if (row.status == FactorStatus::Composite) CHECK(row.A * row.B == row.C);
    }
    CHECK(composites == 9);  // {4,6,8,9,10,12,14,15,16}
    CHECK(summary.composite_found + summary.composite_missed +
              summary.prime_confirmed + summary.discrepancies ==
          13);
    // Concurrency changes nothing.
    auto parallel = sweep(4, 16, {}, 4);
    REQUIRE(parallel.rows.size() == summary.rows.size());
    for (std::size_t i = 0; i < parallel.rows.size(); ++i) {
        CHECK(parallel.rows[i].status == summary.rows[i].status);
        CHECK(parallel.rows[i].B == summary.rows[i].B);
    }
    CHECK(sweep(10, 9).rows.empty());
}
