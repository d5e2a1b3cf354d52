#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "parith/lp_system.hpp"
#include "parith/requirement.hpp"

namespace parith {

// Requirement-level equation, before unknowns are numbered.  Encoders only
// ever emit coefficients in {-1,+1} and right hand sides in {0,1}.
struct Equation {
    std::vector<std::pair<int, Requirement>> terms;
    int rhs = 0;
    ConstraintKind kind = ConstraintKind::Structural;
};

// A data bit: fix the probability of a single literal to 0 or 1.
struct DataBit {
    Literal literal;
    int value;  // 0 or 1
};

// Normalized zero-rhs data equation: P(l) = 0 with the polarity chosen so
// the right hand side vanishes.
Equation data_equation(const DataBit& bit);

// Throws ContradictoryData if two bits force the same variable both ways;
// duplicate consistent entries are dropped.
std::vector<DataBit> validate_data(const std::vector<DataBit>& data,
                                   std::int32_t variable_count);

// One full-adder truth table (a + b + cin -> sum, carry) as two equations,
// all arguments positive global indices.
void emit_full_adder(std::int32_t a, std::int32_t b, std::int32_t cin,
                     std::int32_t sum, std::int32_t carry,
                     std::vector<Equation>& out);

// Half adder: a + b -> sum, carry.
void emit_half_adder(std::int32_t a, std::int32_t b, std::int32_t sum,
                     std::int32_t carry, std::vector<Equation>& out);

// Normalization (arity 1) and marginalization (arity 2, 3) equations of one
// all-positive requirement: 1, 4 or 12 equations.
void emit_universal(const Requirement& positive, std::vector<Equation>& out);

// Universal equations of a whole positive-unknown set, emitted in the total
// order of the generating requirements.  Throws PolarityError on a negated
// input.
std::vector<Equation> universal_equations(std::vector<Requirement> positives);

// Assembles data + structural + universal into an LpSystem whose unknown
// table is the variant closure of the positive unknowns.
LpSystem assemble_system(const Environment& env,
                         const std::vector<Requirement>& positives,
                         const std::vector<DataBit>& data,
                         const std::vector<Equation>& structural);

}  // namespace parith
