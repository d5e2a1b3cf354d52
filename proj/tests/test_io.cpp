#include <doctest.h>

#include <random>
#include <sstream>

#include "parith/addition.hpp"
#include "parith/io.hpp"
#include "parith/multiplication.hpp"

using namespace parith;

namespace {

std::string serialized(const LpSystem& sys) {
    std::ostringstream os;
    export_native(sys, os);
    return os.str();
}

LpSystem reparsed(const LpSystem& sys) {
    std::istringstream is(serialized(sys));
    return parse_native(is);
}

}  // namespace

TEST_CASE("native export of the one-bit system has 12 columns") {
    auto sys = build_addition({1, addition_input_data(1, 0, 1)});
    std::istringstream is(serialized(sys));
    std::string word;
    std::uint64_t vars = 0, rows = 0;
    is >> word >> vars >> word >> rows;
    CHECK(vars == 12);
    CHECK(rows == 12);
}

TEST_CASE("round-trip preserves randomly chosen systems") {
    std::mt19937 rng(20260824);
    for (int trial = 0; trial < 50; ++trial) {
        LpSystem sys;
        if (trial % 3 == 0) {
            std::int32_t n = 1 + static_cast<std::int32_t>(rng() % 4);
            std::uint64_t mask = (1ull << n) - 1;
            sys = build_addition(
                {n, addition_input_data(n, rng() & mask, rng() & mask)});
        } else if (trial % 3 == 1) {
            std::int32_t n = 2 + static_cast<std::int32_t>(rng() % 3);
            std::int32_t m = 2 + static_cast<std::int32_t>(rng() % 3);
            sys = build_multiplication({n, m, {}});
        } else {
            sys = build_factoring(
                FactoringSpec::for_integer(4 + rng() % 60));
        }
        CHECK(serialized(reparsed(sys)) == serialized(sys));
    }
}

TEST_CASE("parsing checks headers and syntax") {
    std::istringstream bad1("vars x rows 2\n");
    CHECK_THROWS_AS(parse_native(bad1), ParseError);
    std::istringstream bad2("vars 1 rows 0\nenv warp 1 0\nu (1)\n");
    CHECK_THROWS_AS(parse_native(bad2), ParseError);
    std::istringstream bad3(
        "vars 1 rows 1\nenv addition 1 0\nu (1)\nrow data 1*5 = 0\n");
    CHECK_THROWS_AS(parse_native(bad3), ParseError);
    std::istringstream bad4("vars 1 rows 2\nenv addition 1 0\nu (1)\n");
    CHECK_THROWS_AS(parse_native(bad4), ParseError);
}

TEST_CASE("round-trip keeps rational coefficients") {
    LpSystem sys;
    sys.env = {EnvironmentKind::Addition, 1, 0};
    sys.unknowns.insert(Requirement{1});
    sys.unknowns.insert(Requirement{-1});
    sys.unknowns.freeze();
    sys.constraints.push_back({{{0, Rational(2) / 3}, {1, Rational(-5) / 7}},
                               Rational(1) / 2,
                               ConstraintKind::Data});
    auto back = reparsed(sys);
    REQUIRE(back.constraints.size() == 1);
    CHECK(back.constraints[0].terms[0].coef == Rational(2) / 3);
    CHECK(back.constraints[0].terms[1].coef == Rational(-5) / 7);
    CHECK(back.constraints[0].rhs == Rational(1) / 2);
    CHECK(back.env.kind == EnvironmentKind::Addition);
}

TEST_CASE("the standard LP text export names columns x<id>") {
    auto sys = build_addition({1, addition_input_data(1, 0, 1)});
    std::ostringstream os;
    export_lp_format(sys, os);
    const std::string text = os.str();
    CHECK(text.find("Maximize") != std::string::npos);
    CHECK(text.find("Subject To") != std::string::npos);
    CHECK(text.find("x12") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
    CHECK(text.find("x13") == std::string::npos);

    std::ostringstream os2;
    std::vector<std::pair<UnknownId, Rational>> obj{{0, Rational(3) / 2}};
    export_lp_format(sys, os2, &obj);
    CHECK(os2.str().find("1.5 x1") != std::string::npos);
}
