#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "parith/lp_system.hpp"
#include "parith/rational.hpp"

namespace parith {

// Unbounded objectives cannot occur in a well-formed encoding (every unknown
// is squeezed by the normalization equations), so the caller treats that
// outcome as a bug in the system it built.
struct EncodingAnomaly : EncodingError {
    using EncodingError::EncodingError;
};

enum class LpStatus { Feasible, Infeasible, Unbounded };

enum class Pricing {
    Bland,    // smallest-index entering column; never cycles
    Dantzig,  // steepest reduced cost; faster, no anti-cycling guarantee
    Hybrid,   // Dantzig, falling back to Bland during degenerate stretches
};

struct SolveOptions {
    Pricing pricing = Pricing::Bland;
    // Degenerate-pivot streak that flips Hybrid pricing to Bland.
    std::int32_t degenerate_streak = 12;
    // Pivot budget per phase; 0 means unlimited.  A capped float run can
    // stall on a non-optimal basis, which exact certification then rejects,
    // so the cap is only safe (and only useful) for the guiding engine.
    std::int64_t max_pivots = 0;
};

template <typename T>
struct BasicLpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::vector<T> point;        // one value per system column, if Feasible
    T objective{};               // maximized value, if an objective was given
    std::vector<T> certificate;  // Farkas row multipliers y, if Infeasible:
                                 // y*A <= 0 componentwise and y*b > 0
    std::int64_t pivots = 0;
};

using LpOutcome = BasicLpOutcome<Rational>;
using FloatLpOutcome = BasicLpOutcome<double>;

// A sparse objective to maximize, in system column ids.
using LinearObjective = std::vector<std::pair<UnknownId, Rational>>;

// Rank of the coefficient matrix over the rationals (right hand sides
// excluded), by exact Gaussian elimination.
int rank(const LpSystem& sys);

// Phase-I feasibility of { A x = b, x >= 0 }.
template <typename T>
BasicLpOutcome<T> solve_feasibility(const LpSystem& sys,
                                    const SolveOptions& opts = {});

// Two-phase maximization of the objective over the same polytope.
template <typename T>
BasicLpOutcome<T> maximize(const LpSystem& sys,
                           const LinearObjective& objective,
                           const SolveOptions& opts = {});

extern template BasicLpOutcome<Rational> solve_feasibility<Rational>(
    const LpSystem&, const SolveOptions&);
extern template BasicLpOutcome<double> solve_feasibility<double>(
    const LpSystem&, const SolveOptions&);
extern template BasicLpOutcome<Rational> maximize<Rational>(
    const LpSystem&, const LinearObjective&, const SolveOptions&);
extern template BasicLpOutcome<double> maximize<double>(
    const LpSystem&, const LinearObjective&, const SolveOptions&);

// Keeps one factored basis alive across many objectives over the same
// polytope: phase I runs once, every further maximize() re-optimizes from
// the previous optimal basis.
template <typename T>
class IncrementalSolver {
  public:
    explicit IncrementalSolver(const LpSystem& sys,
                               const SolveOptions& opts = {});
    ~IncrementalSolver();
    IncrementalSolver(IncrementalSolver&&) noexcept;
    IncrementalSolver& operator=(IncrementalSolver&&) noexcept;

    // Phase-I result (cached after the first call).
    const BasicLpOutcome<T>& feasibility();
    // Phase-II for one objective; feasibility() must have been Feasible.
    BasicLpOutcome<T> maximize(const LinearObjective& objective);

    // Snapshot of the current basis: per kept row, its original constraint
    // index and its basic column.  Valid after a Feasible outcome.
    struct Basis {
        std::vector<std::size_t> rows;
        std::vector<UnknownId> cols;
    };
    Basis basis() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

extern template class IncrementalSolver<Rational>;
extern template class IncrementalSolver<double>;

// Exact certification of a basis proposed by the float solver: solves the
// basis system in rational arithmetic and accepts iff the basic point is
// feasible for the whole system and every reduced cost of the maximization
// is nonpositive.  ok == false means the proposal proves nothing (the
// caller falls back to the exact simplex).
struct CertifiedOptimum {
    bool ok = false;
    Rational value;
    std::vector<Rational> point;
};

CertifiedOptimum certify_basis_optimum(
    const LpSystem& sys, const LinearObjective& objective,
    const std::vector<std::size_t>& basis_rows,
    const std::vector<UnknownId>& basis_cols,
    const std::vector<double>* point_hint = nullptr);

// True iff the point satisfies every constraint of sys exactly (rationals)
// or within the scalar tolerance (doubles), with all entries nonnegative.
template <typename T>
bool satisfies(const LpSystem& sys, const std::vector<T>& point);

// Independent check of an infeasibility certificate.
template <typename T>
bool valid_certificate(const LpSystem& sys, const std::vector<T>& y);

extern template bool satisfies<Rational>(const LpSystem&,
                                         const std::vector<Rational>&);
extern template bool satisfies<double>(const LpSystem&,
                                       const std::vector<double>&);
extern template bool valid_certificate<Rational>(const LpSystem&,
                                                 const std::vector<Rational>&);
extern template bool valid_certificate<double>(const LpSystem&,
                                               const std::vector<double>&);

}  // namespace parith
