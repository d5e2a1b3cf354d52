#include "parith/labeling.hpp"

namespace parith {

namespace {

[[noreturn]] void out_of_range(const char* what) {
    throw RangeError(std::string("role index out of range: ") + what);
}

}  // namespace

std::string VariableRole::str() const {
    switch (kind) {
        case Kind::U: return "U" + std::to_string(i);
        case Kind::V: return "V" + std::to_string(i);
        case Kind::S: return "S" + std::to_string(i);
        case Kind::R: return "R" + std::to_string(i);
        case Kind::U0: return "U0," + std::to_string(i);
        case Kind::Ut:
            return "U" + std::to_string(t) + "," + std::to_string(i);
        case Kind::St:
            return "S" + std::to_string(t) + "," + std::to_string(i);
        case Kind::Rt:
            return "R" + std::to_string(t) + "," + std::to_string(i);
        case Kind::A: return "A" + std::to_string(i);
        case Kind::B: return "B" + std::to_string(t);
    }
    return "?";
}

GlobalIndex addition_index(const VariableRole& role, std::int32_t n) {
    if (n < 1) out_of_range("n < 1");
    const std::int32_t i = role.i;
    switch (role.kind) {
        case VariableRole::Kind::U:
            if (i < 0 || i >= n) out_of_range("U");
            return i + 1;
        case VariableRole::Kind::V:
            if (i < 0 || i >= n) out_of_range("V");
            return i + n + 1;
        case VariableRole::Kind::S:
            if (i < 0 || i > n) out_of_range("S");
            return i == n ? 4 * n : i + 2 * n + 1;  // S_n merged with R_n
        case VariableRole::Kind::R:
            if (i < 1 || i > n) out_of_range("R");
            return i + 3 * n;
        default:
            out_of_range("not an addition role");
    }
}

VariableRole addition_role(GlobalIndex k, std::int32_t n) {
    if (k < 1 || k > 4 * n) out_of_range("k");
    if (k <= n) return {VariableRole::Kind::U, k - 1};
    if (k <= 2 * n) return {VariableRole::Kind::V, k - n - 1};
    if (k <= 3 * n) return {VariableRole::Kind::S, k - 2 * n - 1};
    return {VariableRole::Kind::R, k - 3 * n};
}

GlobalIndex shifted_index(const VariableRole& role, std::int32_t n,
                          std::int32_t m) {
    if (n < 2 || m < 2) out_of_range("n or m");
    const std::int32_t i = role.i;
    const std::int32_t t = role.t;
    switch (role.kind) {
        case VariableRole::Kind::U0:
            if (i < 0 || i >= n) out_of_range("U0");
            return i + 1;
        case VariableRole::Kind::Ut:
            if (t < 1 || t >= m || i < t || i > t + n - 1) out_of_range("Ut");
            return n * (3 * t - 2) + i - t + 1;
        case VariableRole::Kind::St:
            if (t < 1 || t >= m || i < t || i > t + n - 1) out_of_range("St");
            return n * (3 * t - 1) + i - t + 1;
        case VariableRole::Kind::Rt:
            if (t < 1 || t >= m || i < t + 1 || i > t + n) out_of_range("Rt");
            return 3 * n * t + i - t;
        default:
            out_of_range("not a shifted-addition role");
    }
}

VariableRole shifted_role(GlobalIndex k, std::int32_t n, std::int32_t m) {
    if (k < 1 || k > shifted_variable_count(n, m)) out_of_range("k");
    if (k <= n) return {VariableRole::Kind::U0, k - 1};
    const std::int32_t t = (k - n - 1) / (3 * n) + 1;
    const std::int32_t base = n * (3 * t - 2);
    if (k <= base + n) return {VariableRole::Kind::Ut, k - base - 1 + t, t};
    if (k <= base + 2 * n)
        return {VariableRole::Kind::St, k - base - n - 1 + t, t};
    return {VariableRole::Kind::Rt, k - 3 * n * t + t, t};
}

GlobalIndex factor_index(const VariableRole& role, std::int32_t n,
                         std::int32_t m) {
    if (n < 2 || m < 2) out_of_range("n or m");
    switch (role.kind) {
        case VariableRole::Kind::A:
            if (role.i < 0 || role.i >= n) out_of_range("A");
            return role.i + 3 * n * m - 2 * n + 1;
        case VariableRole::Kind::B:
            if (role.t < 0 || role.t >= m) out_of_range("B");
            return role.t + 3 * n * m - n + 1;
        default:
            out_of_range("not a factor role");
    }
}

GlobalIndex multiplication_index(const VariableRole& role, std::int32_t n,
                                 std::int32_t m) {
    if (role.kind == VariableRole::Kind::A || role.kind == VariableRole::Kind::B)
        return factor_index(role, n, m);
    return shifted_index(role, n, m);
}

VariableRole multiplication_role(GlobalIndex k, std::int32_t n,
                                 std::int32_t m) {
    const std::int32_t shifted = shifted_variable_count(n, m);
    if (k > shifted) {
        if (k <= shifted + n)
            return {VariableRole::Kind::A, k - shifted - 1};
        if (k <= shifted + n + m)
            return {VariableRole::Kind::B, 0, k - shifted - n - 1};
        out_of_range("k");
    }
    return shifted_role(k, n, m);
}

GlobalIndex product_index(std::int32_t j, std::int32_t n, std::int32_t m) {
    if (n < 2 || m < 2 || j < 0 || j > m + n - 1) out_of_range("C");
    if (j == 0) return 1;                              // U_{0,0}
    if (j <= m - 1) return 3 * n * j - n + 1;          // S_{j,j}
    if (j <= m + n - 2) return 3 * n * m - 4 * n - m + 2 + j;  // S_{m-1,j}
    return 3 * n * m - 2 * n;                          // R_{m-1,m+n-1}
}

}  // namespace parith
