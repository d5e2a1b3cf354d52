#include <doctest.h>

#include <set>

#include "parith/multiplication.hpp"

using namespace parith;

namespace {

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

TEST_CASE("shifted structural equations reproduce the n=2, m=3 listing") {
    auto eqs = shifted_structural(2, 3);
    REQUIRE(eqs.size() == 8);
    CHECK(conjunctions(equation_for(eqs, 5)) ==
          std::set<Requirement>{Requirement{-2, 3}, Requirement{2, -3}});
    CHECK(conjunctions(equation_for(eqs, 7)) ==
          std::set<Requirement>{Requirement{2, 3}});
    CHECK(conjunctions(equation_for(eqs, 6)) ==
          std::set<Requirement>{Requirement{4, -7}, Requirement{-4, 7}});
    CHECK(conjunctions(equation_for(eqs, 8)) ==
          std::set<Requirement>{Requirement{4, 7}});
    CHECK(conjunctions(equation_for(eqs, 11)) ==
          std::set<Requirement>{Requirement{6, -9}, Requirement{-6, 9}});
    CHECK(conjunctions(equation_for(eqs, 13)) ==
          std::set<Requirement>{Requirement{6, 9}});
    CHECK(conjunctions(equation_for(eqs, 12)) ==
          std::set<Requirement>{Requirement{-8, -10, 13}, Requirement{-8, 10, -13},
                                Requirement{8, -10, -13}, Requirement{8, 10, 13}});
    CHECK(conjunctions(equation_for(eqs, 14)) ==
          std::set<Requirement>{Requirement{8, 10, -13}, Requirement{8, -10, 13},
                                Requirement{-8, 10, 13}, Requirement{8, 10, 13}});
}

TEST_CASE("shifted structural count is 2n(m-1)") {
    CHECK(shifted_structural(3, 2).size() == 6);
    for (std::int32_t n = 2; n <= 6; ++n)
        for (std::int32_t m = 2; m <= 6; ++m)
            CHECK(shifted_structural(n, m).size() ==
                  static_cast<std::size_t>(2 * n * (m - 1)));
}

TEST_CASE("product structural ties partial-product bits to AND gates") {
    auto eqs = product_structural(2, 3);
    CHECK(eqs.size() == 6);
    CHECK(conjunctions(equation_for(eqs, 1)) ==
          std::set<Requirement>{Requirement{15, 17}});  // U_{0,0} = A_0 B_0
    CHECK(conjunctions(equation_for(eqs, 4)) ==
          std::set<Requirement>{Requirement{16, 18}});  // U_{1,2} = A_1 B_1
    CHECK(conjunctions(equation_for(eqs, 10)) ==
          std::set<Requirement>{Requirement{16, 19}});  // U_{2,3} = A_1 B_2
}

TEST_CASE("shifted positive unknowns for n=2, m=3") {
    auto pos = shifted_positive_unknowns(2, 3);
    CHECK(pos.size() == 21);
    std::set<Requirement> set(pos.begin(), pos.end());
    CHECK(set.count(Requirement{8, 10, 13}) == 1);
    for (const Requirement& r :
         {Requirement{2, 3}, Requirement{4, 7}, Requirement{6, 9},
          Requirement{10, 13}, Requirement{8, 13}, Requirement{8, 10}})
        CHECK(set.count(r) == 1);
}

TEST_CASE("multiplication adds the factor unknowns") {
    auto pos = multiplication_positive_unknowns(2, 3);
    CHECK(pos.size() == 32);
    std::set<Requirement> set(pos.begin(), pos.end());
    CHECK(set.count(Requirement{19, 15}) == 1);
    CHECK(set.count(Requirement{15, 17}) == 1);
    CHECK(set.count(Requirement{19}) == 1);
    CHECK(multiplication_positive_unknowns(2, 2).size() == 18);
}

TEST_CASE("count identities hold on the (n, m) grid") {
    for (std::int32_t n = 2; n <= 6; ++n)
        for (std::int32_t m = 2; m <= 6; ++m) {
            auto sys = build_multiplication({n, m, {}});
            const auto expect = multiplication_count_formulas(n, m);
            CHECK(static_cast<std::int64_t>(sys.unknowns.size()) ==
                  expect.unknowns);
            CHECK(static_cast<std::int64_t>(
                      multiplication_positive_unknowns(n, m).size()) ==
                  expect.positive_unknowns);
            auto counts = sys.counts();
            CHECK(static_cast<std::int64_t>(counts.structural) ==
                  expect.structural);
            CHECK(static_cast<std::int64_t>(counts.universal) ==
                  expect.universal);

            const auto shifted = shifted_count_formulas(n, m);
            CHECK(static_cast<std::int64_t>(
                      shifted_positive_unknowns(n, m).size()) ==
                  shifted.positive_unknowns);
            CHECK(static_cast<std::int64_t>(shifted_structural(n, m).size()) ==
                  shifted.structural);
            CHECK(static_cast<std::int64_t>(
                      universal_equations(shifted_positive_unknowns(n, m))
                          .size()) == shifted.universal);
        }
}

TEST_CASE("factoring specs size the environment from the bit length") {
    auto six = FactoringSpec::for_integer(6);
    CHECK(six.c == 3);
    CHECK(six.n == 2);
    CHECK(six.m == 2);
    auto data = factoring_data(six);
    REQUIRE(data.size() == 4);
    // C = 6 = (110)b, padded with one zero bit.
    CHECK(data[0].value == 0);
    CHECK(data[1].value == 1);
    CHECK(data[2].value == 1);
    CHECK(data[3].value == 0);

    auto five = FactoringSpec::for_integer(5);
    auto data5 = factoring_data(five);
    CHECK(data5[0].value == 1);
    CHECK(data5[1].value == 0);
    CHECK(data5[2].value == 1);
    CHECK(data5[3].value == 0);
    CHECK_THROWS_AS(FactoringSpec::for_integer(3), RangeError);
}

TEST_CASE("C=6 factoring system has 48 unknowns and 48 equations") {
    auto sys = build_factoring(FactoringSpec::for_integer(6));
    CHECK(sys.unknowns.size() == 48);
    CHECK(sys.constraints.size() == 48);
}

TEST_CASE("flagship-scale instance counts come from the formulas") {
    auto c768 = multiplication_count_formulas(767, 384);
    CHECK(c768.unknowns == 8813590);
    CHECK(c768.structural + c768.universal + (767 + 384) == 9987098);
    auto c1024 = multiplication_count_formulas(1023, 512);
    CHECK(c1024.unknowns == 15683606);
    CHECK(c1024.structural + c1024.universal + (1023 + 512) == 17772570);
}

TEST_CASE("structural conjunction terms are pairwise exclusive") {
    for (const auto& eqs :
         {shifted_structural(3, 3), product_structural(3, 3)})
        for (const Equation& eq : eqs) {
            std::vector<Requirement> conj;
            for (const auto& [coef, req] : eq.terms)
                if (coef == -1) conj.push_back(req);
            for (std::size_t i = 0; i < conj.size(); ++i)
                for (std::size_t j = i + 1; j < conj.size(); ++j) {
                    bool exclusive = false;
                    for (Literal a : conj[i].literals())
                        for (Literal b : conj[j].literals())
                            if (a == -b) exclusive = true;
                    CHECK(exclusive);
                }
        }
}

TEST_CASE("builds are deterministic") {
    auto a = build_multiplication({3, 2, {}});
    auto b = build_multiplication({3, 2, {}});
    REQUIRE(a.unknowns.size() == b.unknowns.size());
    REQUIRE(a.constraints.size() == b.constraints.size());
    for (std::size_t i = 0; i < a.constraints.size(); ++i) {
        CHECK(a.constraints[i].rhs == b.constraints[i].rhs);
        REQUIRE(a.constraints[i].terms.size() == b.constraints[i].terms.size());
        for (std::size_t j = 0; j < a.constraints[i].terms.size(); ++j) {
            CHECK(a.constraints[i].terms[j].unknown ==
                  b.constraints[i].terms[j].unknown);
            CHECK(a.constraints[i].terms[j].coef ==
                  b.constraints[i].terms[j].coef);
        }
    }
}
