#include "parith/multiplication.hpp"

#include <algorithm>
#include <ostream>

#include "parith/io.hpp"

namespace parith {

namespace {

// Positive generator set implied by a structural equation: the all-positive
// form of every conjunction, plus the positive pairs under each triple.
void collect_positives(const Equation& eq, std::vector<Requirement>& out) {
    for (const auto& [coef, req] : eq.terms) {
        if (req.arity() < 2) continue;
        std::vector<Literal> vars;
        for (Literal l : req.literals()) vars.push_back(var_of(l));
        out.emplace_back(std::span<const Literal>{vars});
        if (vars.size() == 3) {
            out.push_back(Requirement{vars[0], vars[1]});
            out.push_back(Requirement{vars[0], vars[2]});
            out.push_back(Requirement{vars[1], vars[2]});
        }
    }
}

void check_dims(std::int32_t n, std::int32_t m) {
    if (n < 2 || m < 2)
        throw RangeError("shifted addition needs n >= 2 and m >= 2");
}

}  // namespace

void shifted_structural(std::int32_t n, std::int32_t m,
                        const EquationSink& sink) {
    check_dims(n, m);
    std::vector<Equation> step;
    auto flush = [&] {
        // Within one step, order by output index like the addition encoder.
        std::stable_sort(step.begin(), step.end(),
                         [](const Equation& a, const Equation& b) {
                             return a.terms.front().second <
                                    b.terms.front().second;
                         });
        for (Equation& eq : step) sink(eq);
        step.clear();
    };

    // Step t = 1: U_0 + U_1.  Column 1 pairs u_{0,1} with u_{1,1}; the top
    // significant column n pairs u_{1,n} with the incoming carry.
    emit_half_adder(2, n + 1, 2 * n + 1, 3 * n + 1, step);
    for (std::int32_t i = 2; i <= n - 1; ++i)
        emit_full_adder(i + 1, n + i, 3 * n + i - 1, 2 * n + i, 3 * n + i,
                        step);
    emit_half_adder(2 * n, 4 * n - 1, 3 * n, 4 * n, step);
    flush();

    // Steps t >= 2: S_{t-1} + U_t.  The top operand bit of S_{t-1} is its
    // carry variable, so the top column becomes a full adder.
    for (std::int32_t t = 2; t <= m - 1; ++t) {
        const std::int32_t b = 3 * n * t;
        emit_half_adder(b - 4 * n + 2, b - 2 * n + 1, b - n + 1, b + 1, step);
        for (std::int32_t i = 2; i <= n - 1; ++i)
            emit_full_adder(b - 4 * n + i + 1, b - 2 * n + i, b + i - 1,
                            b - n + i, b + i, step);
        emit_full_adder(b - 2 * n, b - n, b + n - 1, b, b + n, step);
        flush();
    }
}

std::vector<Equation> shifted_structural(std::int32_t n, std::int32_t m) {
    std::vector<Equation> out;
    shifted_structural(n, m, [&out](const Equation& eq) { out.push_back(eq); });
    return out;
}

void product_structural(std::int32_t n, std::int32_t m,
                        const EquationSink& sink) {
    check_dims(n, m);
    for (std::int32_t t = 0; t < m; ++t)
        for (std::int32_t i = 0; i < n; ++i) {
            const GlobalIndex u =
                t == 0 ? i + 1
                       : shifted_index({VariableRole::Kind::Ut, t + i, t}, n, m);
            const GlobalIndex a = factor_index({VariableRole::Kind::A, i}, n, m);
            const GlobalIndex b =
                factor_index({VariableRole::Kind::B, 0, t}, n, m);
            Equation eq;
            eq.terms.emplace_back(1, Requirement{u});
            eq.terms.emplace_back(-1, Requirement{a, b});
            sink(eq);
        }
}

std::vector<Equation> product_structural(std::int32_t n, std::int32_t m) {
    std::vector<Equation> out;
    product_structural(n, m, [&out](const Equation& eq) { out.push_back(eq); });
    return out;
}

std::vector<Requirement> shifted_positive_unknowns(std::int32_t n,
                                                   std::int32_t m) {
    check_dims(n, m);
    std::vector<Requirement> out;
    for (std::int32_t k = 1; k <= shifted_variable_count(n, m); ++k)
        out.push_back(Requirement{k});
    shifted_structural(
        n, m, [&out](const Equation& eq) { collect_positives(eq, out); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Requirement> multiplication_positive_unknowns(std::int32_t n,
                                                          std::int32_t m) {
    check_dims(n, m);
    std::vector<Requirement> out;
    for (std::int32_t k = 1; k <= multiplication_variable_count(n, m); ++k)
        out.push_back(Requirement{k});
    auto grab = [&out](const Equation& eq) { collect_positives(eq, out); };
    shifted_structural(n, m, grab);
    product_structural(n, m, grab);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FactoringSpec FactoringSpec::for_integer(const BigInt& C) {
    if (C <= 3) throw RangeError("factoring needs C > 3");
    FactoringSpec spec;
    spec.C = C;
    spec.c = static_cast<std::int32_t>(boost::multiprecision::msb(C)) + 1;
    spec.n = spec.c - 1;
    spec.m = (spec.c + 1) / 2;
    return spec;
}

int FactoringSpec::product_bit(std::int32_t j) const {
    if (j < 0 || j > m + n - 1) throw RangeError("product bit out of range");
    if (j >= c) return 0;
    return boost::multiprecision::bit_test(C, static_cast<unsigned>(j)) ? 1 : 0;
}

std::vector<DataBit> factoring_data(const FactoringSpec& spec) {
    std::vector<DataBit> data;
    for (std::int32_t j = 0; j <= spec.m + spec.n - 1; ++j)
        data.push_back(
            {product_index(j, spec.n, spec.m), spec.product_bit(j)});
    return data;
}

LpSystem build_multiplication(const MultiplicationSpec& spec) {
    const auto data =
        validate_data(spec.data, multiplication_variable_count(spec.n, spec.m));
    std::vector<Equation> structural = shifted_structural(spec.n, spec.m);
    for (Equation& eq : product_structural(spec.n, spec.m))
        structural.push_back(std::move(eq));
    return assemble_system({EnvironmentKind::Multiplication, spec.n, spec.m},
                           multiplication_positive_unknowns(spec.n, spec.m),
                           data, structural);
}

LpSystem build_factoring(const FactoringSpec& spec) {
    return build_multiplication({spec.n, spec.m, factoring_data(spec)});
}

StreamStats encode_factoring_to_stream(const FactoringSpec& spec,
                                       std::ostream& os) {
    const std::int32_t n = spec.n, m = spec.m;
    const auto counts = multiplication_count_formulas(n, m);

    std::vector<Requirement> positives = multiplication_positive_unknowns(n, m);
    UnknownTable table;
    for (const Requirement& r : positives)
        for (const Requirement& v : variants(r)) table.insert(v);
    table.freeze();

    StreamStats stats;
    stats.unknowns = table.size();
    stats.rows = static_cast<std::uint64_t>(counts.structural) +
                 static_cast<std::uint64_t>(counts.universal) +
                 static_cast<std::uint64_t>(m + n);

    io_detail::write_header(os, stats.unknowns, stats.rows);
    io_detail::write_env(os, {EnvironmentKind::Multiplication, n, m});
    for (const Requirement& r : table.requirements())
        io_detail::write_unknown(os, r);

    std::vector<std::pair<int, UnknownId>> terms;
    auto write_equation = [&](const Equation& eq) {
        terms.clear();
        for (const auto& [coef, req] : eq.terms)
            terms.emplace_back(coef, table.id_of(req));
        io_detail::write_row_ints(os, eq.kind, terms, eq.rhs);
    };

    for (const DataBit& bit : factoring_data(spec))
        write_equation(data_equation(bit));
    shifted_structural(n, m, write_equation);
    product_structural(n, m, write_equation);
    std::vector<Equation> universal;
    for (const Requirement& r : positives) {
        universal.clear();
        emit_universal(r, universal);
        for (const Equation& eq : universal) write_equation(eq);
    }
    return stats;
}

}  // namespace parith
