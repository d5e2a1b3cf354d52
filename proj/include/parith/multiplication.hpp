#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "parith/encoding.hpp"
#include "parith/labeling.hpp"
#include "parith/lp_system.hpp"
#include "parith/rational.hpp"

namespace parith {

// A x B = C with A on n bits and B on m bits.
struct MultiplicationSpec {
    std::int32_t n = 2;
    std::int32_t m = 2;
    std::vector<DataBit> data;
};

// Sizing for factoring an input C of c bits: n = c-1, m = floor((c+1)/2),
// product bits padded with zeros up to position m+n-1.  The sizing excludes
// the trivial factorization A = C, B = 1 from the integral solutions.
struct FactoringSpec {
    BigInt C;
    std::int32_t c = 0;  // bit length of C
    std::int32_t n = 0;
    std::int32_t m = 0;

    static FactoringSpec for_integer(const BigInt& C);
    int product_bit(std::int32_t j) const;
};

using EquationSink = std::function<void(const Equation&)>;

// The 2n(m-1) adder equations of the m-step shifted addition.
void shifted_structural(std::int32_t n, std::int32_t m,
                        const EquationSink& sink);
std::vector<Equation> shifted_structural(std::int32_t n, std::int32_t m);

// The mn AND-gate equations P(U_{t,t+i}) = P(A_i ; B_t).
void product_structural(std::int32_t n, std::int32_t m,
                        const EquationSink& sink);
std::vector<Equation> product_structural(std::int32_t n, std::int32_t m);

// Positive generator sets (sorted, deduplicated).
std::vector<Requirement> shifted_positive_unknowns(std::int32_t n,
                                                   std::int32_t m);
std::vector<Requirement> multiplication_positive_unknowns(std::int32_t n,
                                                          std::int32_t m);

// The m+n data equations fixing the bits of C.
std::vector<DataBit> factoring_data(const FactoringSpec& spec);

LpSystem build_multiplication(const MultiplicationSpec& spec);
LpSystem build_factoring(const FactoringSpec& spec);

struct MultiplicationCounts {
    std::int64_t unknowns;
    std::int64_t positive_unknowns;
    std::int64_t structural;
    std::int64_t universal;
};

inline MultiplicationCounts multiplication_count_formulas(std::int64_t n,
                                                          std::int64_t m) {
    return {30 * m * n - 14 * m - 22 * n, 8 * m * n - 2 * m - 5 * n,
            3 * m * n - 2 * n, 31 * m * n - 19 * m - 25 * n};
}

// The universal total is the sum of the per-arity contributions
// 1*(3mn-2n) + 4*(3mn-2m-3n) + 12*(mn-m-n) = 27mn-20m-26n.
inline MultiplicationCounts shifted_count_formulas(std::int64_t n,
                                                   std::int64_t m) {
    return {26 * m * n - 16 * m - 24 * n, 7 * m * n - 3 * m - 6 * n,
            2 * n * (m - 1), 27 * m * n - 20 * m - 26 * n};
}

struct StreamStats {
    std::uint64_t unknowns = 0;
    std::uint64_t rows = 0;
};

// Writes the full factoring system in the native text format without
// materializing rational coefficients; intended for the hundred-bit-and-up
// instances where only encoding, not solving, is in scope.
StreamStats encode_factoring_to_stream(const FactoringSpec& spec,
                                       std::ostream& os);

}  // namespace parith
