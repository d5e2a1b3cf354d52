#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "parith/requirement.hpp"

using namespace parith;

TEST_CASE("canonicalize sorts by variable index") {
    CHECK(Requirement{7, -2} == Requirement{-2, 7});
    CHECK(Requirement{7, -2}.str() == "(-2;7)");
    CHECK(Requirement{5}.str() == "(5)");
    CHECK(Requirement{4, 2, 7} == Requirement{2, 4, 7});
}

TEST_CASE("all orderings of a literal multiset canonicalize identically") {
    std::array<Literal, 3> lits{-3, 8, 1};
    std::sort(lits.begin(), lits.end());
    const Requirement expect{-3, 8, 1};
    do {
        CHECK(Requirement(std::span<const Literal>{lits}) == expect);
    } while (std::next_permutation(lits.begin(), lits.end()));
}

TEST_CASE("degenerate literal lists are rejected") {
    CHECK_THROWS_AS((Requirement{2, -2}), DuplicateVariable);
    CHECK_THROWS_AS(Requirement(std::span<const Literal>{}), ArityError);
    CHECK_THROWS_AS((Requirement{1, 2, 3, 4}), ArityError);
}

TEST_CASE("variant counts per arity") {
    CHECK(variants(Requirement{1}).size() == 2);
    CHECK(variants(Requirement{1, 3}).size() == 8);
    CHECK(variants(Requirement{2, 4, 7}).size() == 26);
}

TEST_CASE("variants of a singleton is the polarity pair") {
    auto vs = variants(Requirement{1});
    std::set<Requirement> got(vs.begin(), vs.end());
    CHECK(got == std::set<Requirement>{Requirement{1}, Requirement{-1}});
}

TEST_CASE("variants is a closure") {
    const Requirement r{2, 4, 7};
    auto vs = variants(r);
    std::set<Requirement> all(vs.begin(), vs.end());
    CHECK(all.count(r) == 1);
    for (const Requirement& v : vs)
        for (const Requirement& w : variants(v)) CHECK(all.count(w) == 1);
}

TEST_CASE("variants closure on random requirements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> var(1, 30);
    for (int trial = 0; trial < 50; ++trial) {
        std::set<int> vars;
        const int arity = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(vars.size()) < arity) vars.insert(var(rng));
        std::vector<Literal> lits;
        for (int v : vars) lits.push_back(rng() % 2 ? v : -v);
        const Requirement r{std::span<const Literal>{lits}};
        auto vs = variants(r);
        const std::size_t expect = r.arity() == 1 ? 2 : r.arity() == 2 ? 8 : 26;
        CHECK(vs.size() == expect);
        std::set<Requirement> all(vs.begin(), vs.end());
        CHECK(all.size() == vs.size());
        for (const Requirement& v : vs)
            for (const Requirement& w : variants(v)) CHECK(all.count(w) == 1);
    }
}

TEST_CASE("total order groups by arity then variables then signs") {
    CHECK(Requirement{9} < Requirement{1, 2});
    CHECK(Requirement{1} < Requirement{-1});
    CHECK(Requirement{-1} < Requirement{2});
    CHECK(Requirement{1, 2} < Requirement{1, 3});
    CHECK(Requirement{1, 2} < Requirement{1, -2});
}
