#include "parith/factor.hpp"

#include <chrono>
#include <mutex>
#include <optional>
#include <thread>

#include "parith/labeling.hpp"
#include "parith/oracle.hpp"
#include "parith/presolve.hpp"

namespace parith {

namespace {

// Maximization oracle used by the bit-fixing loop.  In guided mode the
// float simplex proposes a basis and the rational certification makes the
// answer exact; any failed certificate silently drops to the all-rational
// engine for the rest of this instance.
class DriverSolver {
  public:
    DriverSolver(const LpSystem& sys, const FactorOptions& opts)
        : sys_(sys), opts_(opts) {
        if (opts.float_guided) {
            // Tolerance-based pivoting can cycle on degenerate vertices, so
            // the guiding engine gets a generous pivot budget; a capped run
            // fails certification and drops to the exact engine, which at
            // most happens once per instance.
            SolveOptions guide{Pricing::Hybrid};
            guide.max_pivots =
                20 * static_cast<std::int64_t>(sys.constraints.size() +
                                               sys.unknowns.size()) +
                1000;
            fast_.emplace(sys, guide);
        } else {
            engage_exact();
        }
    }

    LpStatus feasibility() {
        if (exact_) return exact_->feasibility().status;
        const auto& phase1 = fast_->feasibility();
        if (phase1.status == LpStatus::Feasible) {
            // With an empty objective the certification is exactly a
            // feasibility proof for the proposed point and basic columns.
            auto basis = fast_->basis();
            if (certify_basis_optimum(sys_, {}, basis.rows, basis.cols,
                                      &phase1.point)
                    .ok)
                return LpStatus::Feasible;
        }
        // A float verdict proves nothing either way; re-decide exactly.
        engage_exact();
        return exact_->feasibility().status;
    }

    // Exact maximum of the objective; also accumulates pivot counts.
    Rational maximize(const LinearObjective& objective, std::int64_t& pivots) {
        if (!exact_) {
            auto out = fast_->maximize(objective);
            pivots += out.pivots;
            if (out.status == LpStatus::Feasible) {
                auto basis = fast_->basis();
                auto cert = certify_basis_optimum(sys_, objective, basis.rows,
                                                  basis.cols, &out.point);
                if (cert.ok) {
                    ++certified;
                    return cert.value;
                }
            }
            engage_exact();
            if (exact_->feasibility().status != LpStatus::Feasible)
                throw EncodingAnomaly("feasibility flipped between engines");
        }
        auto out = exact_->maximize(objective);
        pivots += out.pivots;
        if (out.status != LpStatus::Feasible)
            throw EncodingAnomaly("unbounded factoring objective");
        return out.objective;
    }

    std::int64_t certified = 0;
    bool used_exact() const { return exact_.has_value(); }

  private:
    void engage_exact() {
        if (!exact_) exact_.emplace(sys_, SolveOptions{opts_.pricing});
    }

    const LpSystem& sys_;
    FactorOptions opts_;
    std::optional<IncrementalSolver<double>> fast_;
    std::optional<IncrementalSolver<Rational>> exact_;
};

}  // namespace

const char* factor_status_name(FactorStatus s) {
    switch (s) {
        case FactorStatus::Composite: return "composite";
        case FactorStatus::PrimeByProcedure: return "prime-by-procedure";
        case FactorStatus::InfeasibleSystem: return "infeasible-system";
        case FactorStatus::Discrepancy: return "discrepancy";
    }
    return "?";
}

FactorResult factor(const BigInt& C, const FactorOptions& opts) {
    if (C <= 3) throw RangeError("factoring needs C > 3");
    const FactoringSpec spec = FactoringSpec::for_integer(C);
    FactorResult res;

    LpSystem sys = build_factoring(spec);
    if (opts.use_presolve) {
        PresolveResult pre = presolve(sys);
        if (pre.status == PresolveStatus::ProvedInfeasible) {
            res.status = FactorStatus::InfeasibleSystem;
            res.detail = pre.infeasibility_reason;
            return res;
        }
        res.presolve_fixed = pre.trace.fixed.size();
        sys = std::move(pre.reduced);
    }
    res.lp_unknowns = sys.unknowns.size();
    res.lp_rows = sys.constraints.size();

    DriverSolver solver(sys, opts);
    const auto note_engines = [&] {
        res.certified = solver.certified;
        res.exact_fallback = opts.float_guided && solver.used_exact();
    };
    if (solver.feasibility() == LpStatus::Infeasible) {
        res.status = FactorStatus::InfeasibleSystem;
        note_engines();
        return res;
    }

    // B's bit t lives at global index t + 3nm - n + 1; singleton unknowns
    // always survive presolve, so the ids resolve in either system.
    auto bit_literal = [&](std::int32_t t) {
        return static_cast<Literal>(factor_index(
            {VariableRole::Kind::B, 0, t}, spec.n, spec.m));
    };
    auto singleton = [&](Literal l) {
        return sys.unknowns.id_of(Requirement{l});
    };

    LinearObjective prefix;
    std::vector<int> bits;
    for (std::int32_t t = 0; t < spec.m; ++t) {
        const Literal k = bit_literal(t);
        const Rational target = t + 1;
        BitDecision decision;
        decision.bit = t;

        const auto evaluate = [&](int polarity) {
            LinearObjective obj = prefix;
            obj.push_back({singleton(polarity ? k : -k), 1});
            const Rational opt = solver.maximize(obj, res.pivots);
            ++res.objectives_evaluated;
            (polarity ? decision.optimum_one : decision.optimum_zero) = opt;
            return opt == target;
        };
        // The preferred polarity wins any tie, so the other polarity only
        // needs evaluating when the preferred one misses the target.
        const int preferred = opts.prefer_one ? 1 : 0;
        int chosen = preferred;
        if (!evaluate(preferred)) {
            chosen = 1 - preferred;
            if (!evaluate(chosen)) {
                res.decisions.push_back(decision);
                res.status = FactorStatus::PrimeByProcedure;
                note_engines();
                return res;
            }
        }
        decision.chosen = chosen;
        res.decisions.push_back(decision);
        bits.push_back(chosen);
        prefix.push_back({singleton(chosen ? k : -k), 1});
    }

    note_engines();
    BigInt B = 0;
    for (std::int32_t t = spec.m; t-- > 0;) B = (B << 1) + bits[static_cast<std::size_t>(t)];
    res.B = B;
    if (B <= 1 || B >= C) {
        res.detail = "trivial candidate B = " + B.str();
        return res;  // Discrepancy
    }
    if (C % B != 0) {
        res.detail = "candidate B = " + B.str() + " does not divide C";
        return res;  // Discrepancy
    }
    const BigInt A = C / B;
    if ((A >> spec.n) != 0) {
        res.detail = "cofactor A = " + A.str() + " exceeds n bits";
        return res;  // Discrepancy
    }
    if (A * B != C) throw EncodingAnomaly("factor product check failed");
    res.A = A;
    res.status = FactorStatus::Composite;
    return res;
}

DeterminismReport classify_solution(const std::vector<Rational>& point,
                                    const LpSystem& lp) {
    DeterminismReport report;
    report.integral = true;
    auto value_of = [&](Literal l) -> Rational {
        if (auto id = lp.unknowns.find(Requirement{l}))
            return point[static_cast<std::size_t>(*id)];
        auto id = lp.unknowns.id_of(Requirement{-l});
        return 1 - point[static_cast<std::size_t>(id)];
    };
    for (UnknownId id = 0; id < static_cast<UnknownId>(lp.unknowns.size());
         ++id) {
        const Requirement& r = lp.unknowns.requirement(id);
        const Rational& v = point[static_cast<std::size_t>(id)];
        if (r.arity() == 1) {
            if (v != 0 && v != 1) report.integral = false;
            continue;
        }
        Rational product = 1;
        for (Literal l : r.literals()) product *= value_of(l);
        if (v != product) report.separability_violations.push_back(r);
    }
    return report;
}

SweepSummary sweep(const BigInt& lo, const BigInt& hi,
                   const FactorOptions& opts, int jobs) {
    SweepSummary summary;
    std::vector<BigInt> inputs;
    for (BigInt c = lo < 4 ? BigInt(4) : lo; c <= hi; ++c) inputs.push_back(c);
    summary.rows.resize(inputs.size());

    std::mutex mtx;
    std::size_t next = 0;
    auto worker = [&] {
        while (true) {
            std::size_t idx;
            {
                std::lock_guard lock(mtx);
                if (next >= inputs.size()) return;
                idx = next++;
            }
            const BigInt& C = inputs[idx];
            const auto start = std::chrono::steady_clock::now();
            FactorResult r = factor(C, opts);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            SweepRow& row = summary.rows[idx];
            row = {C,
                   r.status,
                   r.A,
                   r.B,
                   !trial_division(C).prime,
                   r.objectives_evaluated,
                   r.lp_unknowns,
                   r.lp_rows,
                   r.presolve_fixed,
                   elapsed.count()};
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const SweepRow& row : summary.rows) {
        switch (row.status) {
            case FactorStatus::Composite:
                ++summary.composite_found;
                break;
            case FactorStatus::PrimeByProcedure:
            case FactorStatus::InfeasibleSystem:
                if (row.oracle_composite)
                    ++summary.composite_missed;
                else
                    ++summary.prime_confirmed;
                break;
            case FactorStatus::Discrepancy:
                ++summary.discrepancies;
                break;
        }
    }
    return summary;
}

}  // namespace parith
