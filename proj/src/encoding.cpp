#include "parith/encoding.hpp"

#include <algorithm>
#include <map>

namespace parith {

namespace {

Requirement conj(std::initializer_list<Literal> lits) {
    return Requirement(lits);
}

void sort_terms(Equation& eq) {
    std::sort(eq.terms.begin(), eq.terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
}

}  // namespace

Equation data_equation(const DataBit& bit) {
    Equation eq;
    eq.kind = ConstraintKind::Data;
    const Literal l = bit.value == 1 ? -bit.literal : bit.literal;
    eq.terms.emplace_back(1, Requirement{l});
    eq.rhs = 0;
    return eq;
}

std::vector<DataBit> validate_data(const std::vector<DataBit>& data,
                                   std::int32_t variable_count) {
    std::map<std::int32_t, int> assigned;  // variable -> bit value
    std::vector<DataBit> kept;
    for (const DataBit& bit : data) {
        if (bit.value != 0 && bit.value != 1)
            throw ContradictoryData("data probability must be 0 or 1");
        const std::int32_t v = var_of(bit.literal);
        if (v < 1 || v > variable_count)
            throw RangeError("data literal " + std::to_string(bit.literal) +
                             " outside 1.." + std::to_string(variable_count));
        const int value = bit.literal > 0 ? bit.value : 1 - bit.value;
        auto [it, inserted] = assigned.emplace(v, value);
        if (!inserted) {
            if (it->second != value)
                throw ContradictoryData("variable " + std::to_string(v) +
                                        " fixed to both 0 and 1");
            continue;  // consistent duplicate
        }
        kept.push_back(bit);
    }
    return kept;
}

void emit_full_adder(std::int32_t a, std::int32_t b, std::int32_t cin,
                     std::int32_t sum, std::int32_t carry,
                     std::vector<Equation>& out) {
    Equation s;
    s.terms.emplace_back(1, Requirement{sum});
    for (auto [sa, sb, sc] : {std::array{-1, -1, 1}, std::array{-1, 1, -1},
                              std::array{1, -1, -1}, std::array{1, 1, 1}})
        s.terms.emplace_back(-1, conj({sa * a, sb * b, sc * cin}));
    sort_terms(s);
    out.push_back(std::move(s));

    Equation c;
    c.terms.emplace_back(1, Requirement{carry});
    for (auto [sa, sb, sc] : {std::array{-1, 1, 1}, std::array{1, -1, 1},
                              std::array{1, 1, -1}, std::array{1, 1, 1}})
        c.terms.emplace_back(-1, conj({sa * a, sb * b, sc * cin}));
    sort_terms(c);
    out.push_back(std::move(c));
}

void emit_half_adder(std::int32_t a, std::int32_t b, std::int32_t sum,
                     std::int32_t carry, std::vector<Equation>& out) {
    Equation s;
    s.terms.emplace_back(1, Requirement{sum});
    s.terms.emplace_back(-1, conj({-a, b}));
    s.terms.emplace_back(-1, conj({a, -b}));
    sort_terms(s);
    out.push_back(std::move(s));

    Equation c;
    c.terms.emplace_back(1, Requirement{carry});
    c.terms.emplace_back(-1, conj({a, b}));
    sort_terms(c);
    out.push_back(std::move(c));
}

void emit_universal(const Requirement& positive, std::vector<Equation>& out) {
    if (!positive.all_positive())
        throw PolarityError("universal equations derive from positive unknowns");
    const int p = positive.arity();
    if (p == 1) {
        Equation eq;
        eq.kind = ConstraintKind::Universal;
        eq.terms.emplace_back(1, positive);
        eq.terms.emplace_back(1, Requirement{-positive.lit(0)});
        sort_terms(eq);
        eq.rhs = 1;
        out.push_back(std::move(eq));
        return;
    }
    if (p == 2) {
        const Literal k1 = positive.lit(0), k2 = positive.lit(1);
        for (auto [kept, other] : {std::pair{k1, k2}, std::pair{k2, k1}})
            for (int sign : {1, -1}) {
                Equation eq;
                eq.kind = ConstraintKind::Universal;
                eq.terms.emplace_back(1, Requirement{sign * kept});
                eq.terms.emplace_back(-1, conj({sign * kept, other}));
                eq.terms.emplace_back(-1, conj({sign * kept, -other}));
                sort_terms(eq);
                out.push_back(std::move(eq));
            }
        return;
    }
    const Literal k1 = positive.lit(0), k2 = positive.lit(1),
                  k3 = positive.lit(2);
    const std::array<std::array<Literal, 3>, 3> splits{
        std::array{k1, k2, k3}, std::array{k2, k3, k1}, std::array{k3, k1, k2}};
    for (const auto& [ka, kb, kc] : splits)
        for (int sa : {1, -1})
            for (int sb : {1, -1}) {
                Equation eq;
                eq.kind = ConstraintKind::Universal;
                eq.terms.emplace_back(1, conj({sa * ka, sb * kb}));
                eq.terms.emplace_back(-1, conj({sa * ka, sb * kb, kc}));
                eq.terms.emplace_back(-1, conj({sa * ka, sb * kb, -kc}));
                sort_terms(eq);
                out.push_back(std::move(eq));
            }
}

std::vector<Equation> universal_equations(std::vector<Requirement> positives) {
    std::sort(positives.begin(), positives.end());
    positives.erase(std::unique(positives.begin(), positives.end()),
                    positives.end());
    std::vector<Equation> out;
    for (const Requirement& r : positives) emit_universal(r, out);
    return out;
}

LpSystem assemble_system(const Environment& env,
                         const std::vector<Requirement>& positives,
                         const std::vector<DataBit>& data,
                         const std::vector<Equation>& structural) {
    LpSystem sys;
    sys.env = env;
    for (const Requirement& r : positives)
        for (const Requirement& v : variants(r)) sys.unknowns.insert(v);
    sys.unknowns.freeze();

    auto map_equation = [&sys](const Equation& eq) {
        LinearConstraint row;
        row.kind = eq.kind;
        row.rhs = eq.rhs;
        row.terms.reserve(eq.terms.size());
        for (const auto& [coef, req] : eq.terms)
            row.terms.push_back({sys.unknowns.id_of(req), Rational(coef)});
        return row;
    };

    for (const DataBit& bit : data)
        sys.constraints.push_back(map_equation(data_equation(bit)));
    for (const Equation& eq : structural)
        sys.constraints.push_back(map_equation(eq));
    for (const Equation& eq : universal_equations(positives))
        sys.constraints.push_back(map_equation(eq));
    return sys;
}

}  // namespace parith
