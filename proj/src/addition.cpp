#include "parith/addition.hpp"

#include <algorithm>

namespace parith {

namespace {

using K = VariableRole::Kind;

GlobalIndex idx(K kind, std::int32_t i, std::int32_t n) {
    return addition_index({kind, i}, n);
}

}  // namespace

std::vector<DataBit> addition_input_data(std::int32_t n, std::uint64_t u,
                                         std::uint64_t v) {
    std::vector<DataBit> data;
    for (std::int32_t i = 0; i < n; ++i)
        data.push_back({idx(K::U, i, n), static_cast<int>((u >> i) & 1)});
    for (std::int32_t i = 0; i < n; ++i)
        data.push_back({idx(K::V, i, n), static_cast<int>((v >> i) & 1)});
    return data;
}

std::vector<DataBit> addition_sum_data(std::int32_t n, std::uint64_t s) {
    std::vector<DataBit> data;
    for (std::int32_t i = 0; i <= n; ++i)
        data.push_back({idx(K::S, i, n), static_cast<int>((s >> i) & 1)});
    return data;
}

std::vector<Equation> addition_structural(std::int32_t n) {
    if (n < 1) throw RangeError("addition needs n >= 1");
    std::vector<Equation> out;
    // Bit 0 has no carry in.
    emit_half_adder(idx(K::U, 0, n), idx(K::V, 0, n), idx(K::S, 0, n),
                    idx(K::R, 1, n), out);
    for (std::int32_t i = 1; i < n; ++i)
        emit_full_adder(idx(K::U, i, n), idx(K::V, i, n), idx(K::R, i, n),
                        idx(K::S, i, n), idx(K::R, i + 1, n), out);
    // S_n = R_n is a single merged variable, nothing to emit for i = n.
    std::stable_sort(out.begin(), out.end(),
                     [](const Equation& a, const Equation& b) {
                         return a.terms.front().second < b.terms.front().second;
                     });
    return out;
}

std::vector<Requirement> addition_positive_unknowns(std::int32_t n) {
    if (n < 1) throw RangeError("addition needs n >= 1");
    std::vector<Requirement> out;
    for (std::int32_t k = 1; k <= 4 * n; ++k) out.push_back(Requirement{k});
    out.push_back(Requirement{1, n + 1});
    for (std::int32_t i = 1; i < n; ++i) {
        const Literal u = i + 1, v = i + 1 + n, r = i + 3 * n;
        out.push_back(Requirement{u, v});
        out.push_back(Requirement{u, r});
        out.push_back(Requirement{v, r});
        out.push_back(Requirement{u, v, r});
    }
    return out;
}

LpSystem build_addition(const AdditionSpec& spec) {
    const auto data = validate_data(spec.data, addition_variable_count(spec.n));
    return assemble_system({EnvironmentKind::Addition, spec.n, 0},
                           addition_positive_unknowns(spec.n), data,
                           addition_structural(spec.n));
}

}  // namespace parith
