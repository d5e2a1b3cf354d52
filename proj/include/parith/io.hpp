#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "parith/lp_system.hpp"

namespace parith {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Native text format.  Line 1 is "vars <N> rows <R>", then an environment
// line, one "u <requirement>" line per unknown in table order, and one
// "row <kind> <coef>*<id> ... = <rhs>" line per constraint (ids 1-based,
// rationals as "p/q", integers without the denominator).
void export_native(const LpSystem& sys, std::ostream& os);
LpSystem parse_native(std::istream& is);

// CPLEX-style LP text for external solvers; columns are named x<id> with
// 1-based ids.  An optional objective (unknown id -> coefficient) is
// maximized; without one a zero objective is written.
void export_lp_format(const LpSystem& sys, std::ostream& os,
                      const std::vector<std::pair<UnknownId, Rational>>*
                          maximize_objective = nullptr);

namespace io_detail {

// Shared by the in-memory exporter and the streaming factoring encoder.
void write_header(std::ostream& os, std::uint64_t vars, std::uint64_t rows);
void write_env(std::ostream& os, const Environment& env);
void write_unknown(std::ostream& os, const Requirement& r);
// Integer-coefficient fast path used by the encoders.
void write_row_ints(std::ostream& os, ConstraintKind kind,
                    const std::vector<std::pair<int, UnknownId>>& terms,
                    int rhs);
std::string kind_token(ConstraintKind kind);
std::optional<ConstraintKind> parse_kind(const std::string& token);

}  // namespace io_detail

}  // namespace parith
