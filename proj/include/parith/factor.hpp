#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "parith/lp_system.hpp"
#include "parith/multiplication.hpp"
#include "parith/rational.hpp"
#include "parith/simplex.hpp"

namespace parith {

enum class FactorStatus {
    Composite,         // verified factors: A * B == C, both nontrivial
    PrimeByProcedure,  // neither polarity reached the target optimum
    InfeasibleSystem,  // phase I failed (or propagation proved it)
    Discrepancy,       // procedure finished but its answer does not divide C
};

const char* factor_status_name(FactorStatus s);

// One step of the bit-fixing loop: the maxima of the prefix objective
// extended with each polarity of B's bit, and the branch taken.  The
// preferred polarity wins ties, so the other maximum is only computed when
// the preferred one misses its target; -1 marks an unevaluated polarity.
struct BitDecision {
    std::int32_t bit = 0;
    Rational optimum_one = -1;
    Rational optimum_zero = -1;
    int chosen = -1;  // -1 when neither polarity reached the target
};

struct FactorOptions {
    bool use_presolve = true;
    bool prefer_one = true;  // branch taken when both polarities reach
    // Pricing of the exact engine.  Hybrid keeps Bland's termination
    // guarantee (it reverts to Bland on degenerate stretches) but prices
    // by steepest reduced cost elsewhere, which matters on the instances
    // that fall back from the guided mode.
    Pricing pricing = Pricing::Hybrid;
    // Steer with the float simplex and certify each basis in exact
    // arithmetic, falling back to the all-rational simplex whenever a
    // certificate fails.  Every reported optimum is exact either way;
    // this only trades which engine finds the basis.
    bool float_guided = true;
};

struct FactorResult {
    FactorStatus status = FactorStatus::Discrepancy;
    BigInt A = 0;
    BigInt B = 0;
    std::string detail;
    std::vector<BitDecision> decisions;
    std::int64_t objectives_evaluated = 0;
    std::int64_t pivots = 0;
    std::int64_t certified = 0;     // float bases accepted by exact audit
    bool exact_fallback = false;    // all-rational engine was engaged
    std::size_t lp_unknowns = 0;
    std::size_t lp_rows = 0;
    std::size_t presolve_fixed = 0;
};

// The LP bit-fixing factoring procedure for C > 3.  Never returns
// Composite with A * B != C: the reconstructed candidate is checked by
// integer division before anything is reported.
FactorResult factor(const BigInt& C, const FactorOptions& opts = {});

// Integrality and separability audit of a feasible point.
struct DeterminismReport {
    bool integral = false;  // every singleton unknown is 0 or 1
    std::vector<Requirement> separability_violations;
};

DeterminismReport classify_solution(const std::vector<Rational>& point,
                                    const LpSystem& lp);

struct SweepRow {
    BigInt C;
    FactorStatus status = FactorStatus::Discrepancy;
    BigInt A = 0;
    BigInt B = 0;
    bool oracle_composite = false;
    std::int64_t objectives_evaluated = 0;
    std::size_t lp_unknowns = 0;
    std::size_t lp_rows = 0;
    std::size_t presolve_fixed = 0;
    double wall_seconds = 0;
};

struct SweepSummary {
    std::vector<SweepRow> rows;
    // Confusion matrix against trial division.  A false Composite is
    // impossible by construction, so the fourth cell counts procedure
    // discrepancies instead.
    std::int64_t composite_found = 0;    // Composite, correct by check
    std::int64_t composite_missed = 0;   // prime verdict on a composite
    std::int64_t prime_confirmed = 0;    // prime verdict on a prime
    std::int64_t discrepancies = 0;      // Discrepancy outcomes

    // True iff any result contradicts the ground truth (Discrepancy rows
    // and prime verdicts on composites).
    bool any_disagreement() const {
        return discrepancies > 0 || composite_missed > 0;
    }
};

SweepSummary sweep(const BigInt& lo, const BigInt& hi,
                   const FactorOptions& opts = {}, int jobs = 1);

}  // namespace parith
