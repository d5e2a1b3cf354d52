#include "parith/oracle.hpp"

#include "parith/labeling.hpp"

namespace parith {

CompleteAssignment addition_assignment(std::int32_t n, std::uint64_t u,
                                       std::uint64_t v) {
    using K = VariableRole::Kind;
    CompleteAssignment a;
    a.bit.assign(static_cast<std::size_t>(addition_variable_count(n)) + 1, 0);
    auto set = [&](const VariableRole& role, int value) {
        a.bit[static_cast<std::size_t>(addition_index(role, n))] = value;
    };
    for (std::int32_t i = 0; i < n; ++i) {
        set({K::U, i}, static_cast<int>(u >> i & 1));
        set({K::V, i}, static_cast<int>(v >> i & 1));
    }
    const std::uint64_t s = u + v;
    for (std::int32_t i = 0; i < n; ++i)
        set({K::S, i}, static_cast<int>(s >> i & 1));
    // R_i is the carry into column i; R_n doubles as the top sum bit.
    for (std::int32_t i = 1; i <= n; ++i) {
        const std::uint64_t low = (1ull << i) - 1;
        set({K::R, i}, static_cast<int>(((u & low) + (v & low)) >> i));
    }
    return a;
}

std::vector<CompleteAssignment> enumerate_addition(
    std::int32_t n, const std::vector<DataBit>& data) {
    if (n < 1 || n > 6) throw TooLarge("enumeration bound is n <= 6");
    std::vector<CompleteAssignment> out;
    for (std::uint64_t u = 0; u < (1ull << n); ++u)
        for (std::uint64_t v = 0; v < (1ull << n); ++v) {
            CompleteAssignment a = addition_assignment(n, u, v);
            if (a.consistent(data)) out.push_back(std::move(a));
        }
    return out;
}

CompleteAssignment multiplication_assignment(std::int32_t n, std::int32_t m,
                                             const BigInt& A, const BigInt& B) {
    using K = VariableRole::Kind;
    if (A < 0 || (A >> n) != 0) throw RangeError("A does not fit n bits");
    if (B < 0 || (B >> m) != 0) throw RangeError("B does not fit m bits");
    CompleteAssignment a;
    a.bit.assign(
        static_cast<std::size_t>(multiplication_variable_count(n, m)) + 1, 0);
    auto set = [&](const VariableRole& role, int value) {
        a.bit[static_cast<std::size_t>(multiplication_index(role, n, m))] =
            value;
    };
    auto bit_of = [](const BigInt& x, std::int32_t i) {
        return static_cast<int>((x >> i) & 1);
    };
    for (std::int32_t i = 0; i < n; ++i) set({K::A, i}, bit_of(A, i));
    for (std::int32_t t = 0; t < m; ++t) set({K::B, 0, t}, bit_of(B, t));

    for (std::int32_t i = 0; i < n; ++i)
        set({K::U0, i}, bit_of(B, 0) * bit_of(A, i));
    // Running partial sum P_t = A * (B mod 2^(t+1)); step t adds the shifted
    // row U_t = A * b_t * 2^t.
    BigInt prev = A * bit_of(B, 0);
    for (std::int32_t t = 1; t < m; ++t) {
        const BigInt row = (A * bit_of(B, t)) << t;
        const BigInt sum = prev + row;
        for (std::int32_t i = t; i < t + n; ++i) {
            set({K::Ut, i, t}, bit_of(row, i));
            set({K::St, i, t}, bit_of(sum, i));
        }
        for (std::int32_t i = t + 1; i <= t + n; ++i) {
            const BigInt low = (BigInt(1) << i) - 1;
            set({K::Rt, i, t},
                static_cast<int>(((prev & low) + (row & low)) >> i));
        }
        prev = sum;
    }
    return a;
}

std::vector<Rational> lift(const CompleteAssignment& a, const LpSystem& lp) {
    std::vector<Rational> point(lp.unknowns.size(), 0);
    for (UnknownId id = 0; id < static_cast<UnknownId>(lp.unknowns.size());
         ++id) {
        int value = 1;
        for (Literal l : lp.unknowns.requirement(id).literals())
            value &= a.value(l);
        point[static_cast<std::size_t>(id)] = value;
    }
    return point;
}

Divisor trial_division(const BigInt& C) {
    if (C <= 1) throw RangeError("trial division needs C > 1");
    for (BigInt d = 2; d * d <= C; ++d)
        if (C % d == 0) return {false, d};
    return {true, 0};
}

}  // namespace parith
