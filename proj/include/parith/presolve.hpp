#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parith/lp_system.hpp"
#include "parith/rational.hpp"

namespace parith {

// Audit record of a presolve pass.  All ids refer to the *original* unknown
// table; replaying fixed + substitutions on the original system reproduces
// the reduced one.
struct PresolveTrace {
    std::map<UnknownId, Rational> fixed;
    // (eliminated multi-literal unknown, surviving representative).
    std::vector<std::pair<UnknownId, UnknownId>> substitutions;
    std::size_t eliminated_constraints = 0;
};

enum class PresolveStatus { Reduced, ProvedInfeasible };

struct PresolveResult {
    PresolveStatus status = PresolveStatus::Reduced;
    std::string infeasibility_reason;  // set iff ProvedInfeasible
    LpSystem reduced;
    PresolveTrace trace;
    // reduced column id -> original unknown id.
    std::vector<UnknownId> column_map;
};

// Propagates fixed singleton probabilities through the product rule
// (P(l)=0 kills every conjunction containing l; P(l)=1 drops l from every
// conjunction containing it), complements (P(-l) = 1 - P(l)) and
// single-unknown rows, to a fixpoint.
//
// The reduced system keeps every singleton unknown as a column -- a fixed
// singleton is represented by one data row P(l) = v -- while eliminated
// multi-literal unknowns are substituted away.  Rows that collapse to 0 = 0
// are dropped; 0 = c with c != 0, or any probability forced outside [0,1],
// yields ProvedInfeasible (a solver outcome, not an error).
PresolveResult presolve(const LpSystem& lp);

}  // namespace parith
