#pragma once

#include <cstdint>
#include <string>

#include "parith/requirement.hpp"

namespace parith {

// 1-based position of a variable in an environment's global list.
using GlobalIndex = std::int32_t;

// Per-bit role of a global variable.  Addition uses U/V/S/R; the shifted
// addition inside multiplication uses U0/Ut/St/Rt, extended with the factor
// rows A/B.  For the step roles the index i is the *column position* of the
// bit (so Ut has i in [t, t+n-1], Rt has i in [t+1, t+n]).
struct VariableRole {
    enum class Kind { U, V, S, R, U0, Ut, St, Rt, A, B };
    Kind kind;
    std::int32_t i = 0;
    std::int32_t t = 0;

    friend bool operator==(const VariableRole&, const VariableRole&) = default;
    std::string str() const;
};

// ---- addition of two n-bit integers: 4n variables -------------------------
//
// U_i -> i+1, V_i -> i+n+1, S_i -> i+2n+1 (i < n), R_i -> i+3n,
// and the merged top bit S_n = R_n -> 4n.
GlobalIndex addition_index(const VariableRole& role, std::int32_t n);
VariableRole addition_role(GlobalIndex k, std::int32_t n);

// ---- addition of m shifted n-bit integers: 3nm-2n variables ---------------
GlobalIndex shifted_index(const VariableRole& role, std::int32_t n,
                          std::int32_t m);
VariableRole shifted_role(GlobalIndex k, std::int32_t n, std::int32_t m);

// ---- multiplication extension: A_i and B_t rows ---------------------------
//
// A_i -> i+3nm-2n+1, B_t -> t+3nm-n+1; total variable count 3nm-n+m.
GlobalIndex factor_index(const VariableRole& role, std::int32_t n,
                         std::int32_t m);

// Resolves any multiplication-environment role (step roles and A/B).
GlobalIndex multiplication_index(const VariableRole& role, std::int32_t n,
                                 std::int32_t m);
VariableRole multiplication_role(GlobalIndex k, std::int32_t n, std::int32_t m);

// Global index of product bit C_j (an alias of U_{0,0}, S_{j,j}, S_{m-1,j}
// or R_{m-1,m+n-1} depending on j).
GlobalIndex product_index(std::int32_t j, std::int32_t n, std::int32_t m);

inline std::int32_t addition_variable_count(std::int32_t n) { return 4 * n; }
inline std::int32_t shifted_variable_count(std::int32_t n, std::int32_t m) {
    return 3 * n * m - 2 * n;
}
inline std::int32_t multiplication_variable_count(std::int32_t n,
                                                  std::int32_t m) {
    return 3 * n * m - n + m;
}

}  // namespace parith
