#pragma once

#include <cstdint>
#include <vector>

#include "parith/encoding.hpp"
#include "parith/labeling.hpp"
#include "parith/lp_system.hpp"

namespace parith {

// S = U + V over n-bit inputs.  data may fix any subset of the 4n variables
// (the "exotic" cases: subtraction, fixed carries, ...).
struct AdditionSpec {
    std::int32_t n = 1;
    std::vector<DataBit> data;
};

// Data bits for the conventional addition U + V.
std::vector<DataBit> addition_input_data(std::int32_t n, std::uint64_t u,
                                         std::uint64_t v);
// Data bits fixing the n+1 sum bits to the value s (top bit lands on R_n).
std::vector<DataBit> addition_sum_data(std::int32_t n, std::uint64_t s);

// The 2n full/half adder equations of the addition environment, ordered by
// output index.
std::vector<Equation> addition_structural(std::int32_t n);

// The 8n-3 all-positive generator requirements: the 4n singletons, (1;n+1)
// and, per inner bit, the carry triple with its three positive pairs.
std::vector<Requirement> addition_positive_unknowns(std::int32_t n);

LpSystem build_addition(const AdditionSpec& spec);

struct AdditionCounts {
    std::int64_t unknowns;
    std::int64_t positive_unknowns;
    std::int64_t structural;
    std::int64_t universal;
};

inline AdditionCounts addition_count_formulas(std::int64_t n) {
    return {28 * n - 16, 8 * n - 3, 2 * n, 28 * n - 20};
}

}  // namespace parith
