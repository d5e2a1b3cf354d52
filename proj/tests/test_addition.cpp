#include <doctest.h>

#include <map>
#include <set>

#include "parith/addition.hpp"

using namespace parith;

namespace {

// Finds the equation whose first (lowest-order) term is P(target).
const Equation& equation_for(const std::vector<Equation>& eqs,
                             GlobalIndex target) {
    for (const Equation& eq : eqs)
        if (eq.terms.front().second == Requirement{target}) return eq;
    throw std::runtime_error("no equation for target");
}

std::set<Requirement> conjunctions(const Equation& eq) {
    std::set<Requirement> out;
    for (const auto& [coef, req] : eq.terms)
        if (coef == -1) out.insert(req);
    return out;
}

}  // namespace

TEST_CASE("n=1 structural equations are the one-bit half adder") {
    auto eqs = addition_structural(1);
    REQUIRE(eqs.size() == 2);
    CHECK(conjunctions(equation_for(eqs, 3)) ==
          std::set<Requirement>{Requirement{2, -1}, Requirement{-2, 1}});
    CHECK(conjunctions(equation_for(eqs, 4)) ==
          std::set<Requirement>{Requirement{2, 1}});
}

TEST_CASE("n=2 structural equations match the worked 2+3 system") {
    auto eqs = addition_structural(2);
    REQUIRE(eqs.size() == 4);
    CHECK(conjunctions(equation_for(eqs, 5)) ==
          std::set<Requirement>{Requirement{1, -3}, Requirement{-1, 3}});
    CHECK(conjunctions(equation_for(eqs, 7)) ==
          std::set<Requirement>{Requirement{1, 3}});
    CHECK(conjunctions(equation_for(eqs, 6)) ==
          std::set<Requirement>{Requirement{-2, -4, 7}, Requirement{-2, 4, -7},
                                Requirement{2, -4, -7}, Requirement{2, 4, 7}});
    CHECK(conjunctions(equation_for(eqs, 8)) ==
          std::set<Requirement>{Requirement{-2, 4, 7}, Requirement{2, -4, 7},
                                Requirement{2, 4, -7}, Requirement{2, 4, 7}});
}

TEST_CASE("n=3 middle-bit adder instantiates the carry chain") {
    auto eqs = addition_structural(3);
    REQUIRE(eqs.size() == 6);
    // Sum output S_1 = X_8 over operands U_1 = 2, V_1 = 5, carry R_1 = 10.
    const Equation& sum = equation_for(eqs, 8);
    CHECK(sum.terms.size() == 5);
    std::set<std::int32_t> vars;
    for (const auto& [coef, req] : sum.terms)
        if (req.arity() == 3)
            for (Literal l : req.literals()) vars.insert(var_of(l));
    CHECK(vars == std::set<std::int32_t>{2, 5, 10});
    // Next bit up uses R_2 = 11.
    const Equation& sum2 = equation_for(eqs, 9);
    std::set<std::int32_t> vars2;
    for (const auto& [coef, req] : sum2.terms)
        if (req.arity() == 3)
            for (Literal l : req.literals()) vars2.insert(var_of(l));
    CHECK(vars2 == std::set<std::int32_t>{3, 6, 11});
}

TEST_CASE("positive unknowns of the addition environment") {
    auto p2 = addition_positive_unknowns(2);
    CHECK(p2.size() == 13);
    std::set<Requirement> set2(p2.begin(), p2.end());
    CHECK(set2.count(Requirement{1, 3}) == 1);
    CHECK(set2.count(Requirement{2, 4, 7}) == 1);
    CHECK(set2.count(Requirement{2, 4}) == 1);
    CHECK(set2.count(Requirement{2, 7}) == 1);
    CHECK(set2.count(Requirement{4, 7}) == 1);
    CHECK(addition_positive_unknowns(3).size() == 21);
    for (const Requirement& r : p2) CHECK(r.all_positive());
}

TEST_CASE("universal equation counts per generator") {
    std::vector<Equation> out;
    emit_universal(Requirement{1}, out);
    CHECK(out.size() == 1);
    CHECK(out[0].rhs == 1);
    out.clear();
    emit_universal(Requirement{1, 3}, out);
    CHECK(out.size() == 4);
    out.clear();
    emit_universal(Requirement{2, 4, 7}, out);
    CHECK(out.size() == 12);
    CHECK_THROWS_AS(emit_universal(Requirement{-1, 3}, out), PolarityError);
    CHECK(universal_equations(addition_positive_unknowns(2)).size() == 36);
}

TEST_CASE("2+3 builds the 40-unknown 44-equation system") {
    auto sys = build_addition({2, addition_input_data(2, 2, 3)});
    CHECK(sys.unknowns.size() == 40);
    CHECK(sys.constraints.size() == 44);
    auto counts = sys.counts();
    CHECK(counts.data == 4);
    CHECK(counts.structural == 4);
    CHECK(counts.universal == 36);
}

TEST_CASE("one-bit systems match the worked examples") {
    auto sys = build_addition({1, addition_input_data(1, 0, 1)});
    CHECK(sys.unknowns.size() == 12);
    CHECK(sys.constraints.size() == 12);

    // Subtraction posed as exotic data: S = 0 and U = 1.
    AdditionSpec sub{1, addition_sum_data(1, 0)};
    sub.data.push_back({1, 1});
    auto sys2 = build_addition(sub);
    CHECK(sys2.unknowns.size() == 12);
    CHECK(sys2.constraints.size() == 13);
}

TEST_CASE("count identities hold for n in [2,16]") {
    for (std::int32_t n = 2; n <= 16; ++n) {
        auto sys = build_addition({n, {}});
        const auto expect = addition_count_formulas(n);
        CHECK(static_cast<std::int64_t>(sys.unknowns.size()) ==
              expect.unknowns);
        CHECK(static_cast<std::int64_t>(addition_positive_unknowns(n).size()) ==
              expect.positive_unknowns);
        auto counts = sys.counts();
        CHECK(static_cast<std::int64_t>(counts.structural) == expect.structural);
        CHECK(static_cast<std::int64_t>(counts.universal) == expect.universal);
    }
}

TEST_CASE("coefficients, right hand sides and sparsity") {
    auto sys = build_addition({3, addition_input_data(3, 5, 2)});
    std::map<UnknownId, int> column_uses;
    for (const auto& row : sys.constraints) {
        CHECK(row.terms.size() <= 5);
        CHECK((row.rhs == 0 || row.rhs == 1));
        for (const auto& term : row.terms) {
            CHECK((term.coef == 1 || term.coef == -1));
            ++column_uses[term.unknown];
        }
        if (row.kind == ConstraintKind::Universal) CHECK(row.terms.size() <= 3);
    }
    for (const auto& [id, uses] : column_uses) CHECK(uses <= 13);
}

TEST_CASE("contradictory data is rejected") {
    AdditionSpec spec{2, addition_input_data(2, 2, 3)};
    spec.data.push_back({-2, 1});  // U_1 already fixed to 1
    CHECK_THROWS_AS(build_addition(spec), ContradictoryData);
    // Consistent duplicates collapse.
    AdditionSpec dup{2, addition_input_data(2, 2, 3)};
    dup.data.push_back({2, 1});
    CHECK(build_addition(dup).counts().data == 4);
}
