#pragma once

#include <cstdint>
#include <vector>

#include "parith/encoding.hpp"
#include "parith/labeling.hpp"
#include "parith/lp_system.hpp"
#include "parith/rational.hpp"

namespace parith {

struct TooLarge : EncodingError {
    using EncodingError::EncodingError;
};

// A 0/1 value for every global variable of an environment (1-based).
struct CompleteAssignment {
    std::vector<int> bit;  // bit[0] unused

    int operator[](GlobalIndex k) const {
        return bit[static_cast<std::size_t>(k)];
    }
    // Value of a literal: the bit for k, its complement for -k.
    int value(Literal l) const {
        const int b = bit[static_cast<std::size_t>(var_of(l))];
        return l > 0 ? b : 1 - b;
    }
    bool consistent(const std::vector<DataBit>& data) const {
        for (const DataBit& d : data)
            if (value(d.literal) != d.value) return false;
        return true;
    }
};

// The full variable assignment of the addition U + V (carries included).
CompleteAssignment addition_assignment(std::int32_t n, std::uint64_t u,
                                       std::uint64_t v);

// All assignments over free (U, V) pairs consistent with the data bits,
// with sums and carries computed by integer addition.  Throws TooLarge
// above n = 6.
std::vector<CompleteAssignment> enumerate_addition(
    std::int32_t n, const std::vector<DataBit>& data);

// The full variable assignment of the product A x B (partial products,
// partial sums and carries included).  A must fit n bits, B m bits.
CompleteAssignment multiplication_assignment(std::int32_t n, std::int32_t m,
                                             const BigInt& A, const BigInt& B);

// Deterministic LP point of an assignment: each unknown becomes the product
// of its literals' indicator values (0 or 1).
std::vector<Rational> lift(const CompleteAssignment& a, const LpSystem& lp);

struct Divisor {
    bool prime = false;
    BigInt factor = 0;  // smallest prime factor when composite
};

// Exact classification by division up to sqrt(C); C must exceed 1.
Divisor trial_division(const BigInt& C);

}  // namespace parith
