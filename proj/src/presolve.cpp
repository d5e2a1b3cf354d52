#include "parith/presolve.hpp"

#include <deque>
#include <map>
#include <unordered_map>

namespace parith {

namespace {

// Per-unknown propagation state.  Alias targets always have a smaller table
// id (dropping a literal lowers the arity, and the table orders by arity
// first), so chains terminate.
struct Cell {
    enum Kind { Free, Fixed, Alias } kind = Free;
    Rational value;
    UnknownId target = -1;
};

struct Propagator {
    const LpSystem& lp;
    std::vector<Cell> state;
    // literal -> ids of multi-literal unknowns containing it.
    std::unordered_map<Literal, std::vector<UnknownId>> by_literal;
    std::deque<UnknownId> pending;  // singletons fixed, complement/cascade due
    std::size_t changes = 0;        // fixes + aliases, for fixpoint detection
    bool infeasible = false;
    std::string reason;

    explicit Propagator(const LpSystem& sys)
        : lp(sys), state(sys.unknowns.size()) {
        for (UnknownId id = 0; id < static_cast<UnknownId>(state.size());
             ++id) {
            const Requirement& r = lp.unknowns.requirement(id);
            if (r.arity() < 2) continue;
            for (Literal l : r.literals()) by_literal[l].push_back(id);
        }
    }

    // Follows alias links; returns the representative column, with kind
    // Fixed meaning "constant state[rep].value".
    UnknownId rep(UnknownId id) const {
        while (state[static_cast<std::size_t>(id)].kind == Cell::Alias)
            id = state[static_cast<std::size_t>(id)].target;
        return id;
    }

    void fail(std::string why) {
        if (!infeasible) {
            infeasible = true;
            reason = std::move(why);
        }
    }

    void fix(UnknownId id, const Rational& v) {
        if (infeasible) return;
        id = rep(id);
        Cell& cell = state[static_cast<std::size_t>(id)];
        if (cell.kind == Cell::Fixed) {
            if (cell.value != v)
                fail("P" + lp.unknowns.requirement(id).str() +
                     " forced to two different values");
            return;
        }
        if (v < 0 || v > 1) {
            fail("P" + lp.unknowns.requirement(id).str() + " = " +
                 Rational(v).str() + " outside [0,1]");
            return;
        }
        cell.kind = Cell::Fixed;
        cell.value = v;
        ++changes;
        if (lp.unknowns.requirement(id).arity() == 1) pending.push_back(id);
    }

    // P(a) = P(b); aliases the larger id to the smaller.
    void merge(UnknownId a, UnknownId b) {
        if (infeasible) return;
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        const Cell& ca = state[static_cast<std::size_t>(a)];
        const Cell& cb = state[static_cast<std::size_t>(b)];
        if (ca.kind == Cell::Fixed && cb.kind == Cell::Fixed) {
            if (ca.value != cb.value)
                fail("P" + lp.unknowns.requirement(a).str() + " and P" +
                     lp.unknowns.requirement(b).str() +
                     " are equal but fixed apart");
            return;
        }
        if (ca.kind == Cell::Fixed) return fix(b, ca.value);
        if (cb.kind == Cell::Fixed) return fix(a, cb.value);
        if (a < b) std::swap(a, b);
        state[static_cast<std::size_t>(a)] = {Cell::Alias, 0, b};
        ++changes;
    }

    // Product-rule cascade from every singleton fixed so far.
    void drain() {
        while (!pending.empty() && !infeasible) {
            const UnknownId id = pending.front();
            pending.pop_front();
            const Literal l = lp.unknowns.requirement(id).lit(0);
            const Rational v = state[static_cast<std::size_t>(id)].value;
            if (auto comp = lp.unknowns.find(Requirement{-l}))
                fix(*comp, 1 - v);
            if (v == 0) {
                if (auto it = by_literal.find(l); it != by_literal.end())
                    for (UnknownId u : it->second) fix(u, 0);
            } else if (v == 1) {
                if (auto it = by_literal.find(l); it != by_literal.end())
                    for (UnknownId u : it->second) {
                        const Requirement rest =
                            lp.unknowns.requirement(u).without_var(var_of(l));
                        merge(u, lp.unknowns.id_of(rest));
                    }
            }
        }
    }

    // One substitution sweep over all rows.  Rows reduced to a single
    // surviving unknown fix it.
    void sweep_rows() {
        for (const LinearConstraint& row : lp.constraints) {
            if (infeasible) return;
            std::map<UnknownId, Rational> cols;
            Rational rhs = row.rhs;
            for (const auto& term : row.terms) {
                const UnknownId r = rep(term.unknown);
                const Cell& cell = state[static_cast<std::size_t>(r)];
                if (cell.kind == Cell::Fixed)
                    rhs -= term.coef * cell.value;
                else
                    cols[r] += term.coef;
            }
            std::erase_if(cols, [](const auto& kv) { return kv.second == 0; });
            if (cols.empty()) {
                if (rhs != 0)
                    fail("row reduces to 0 = " + rhs.str());
            } else if (cols.size() == 1) {
                const auto& [id, coef] = *cols.begin();
                fix(id, rhs / coef);
            }
        }
    }

    // Alternates cascading and row sweeps until neither fixes nor aliases
    // anything new.  Each change permanently moves a cell out of Free, so
    // the loop runs at most |unknowns| + 1 times.
    void run() {
        while (!infeasible) {
            const std::size_t before = changes;
            sweep_rows();
            drain();
            if (changes == before) break;
        }
    }
};

}  // namespace

PresolveResult presolve(const LpSystem& lp) {
    Propagator prop(lp);
    prop.run();

    PresolveResult res;
    if (prop.infeasible) {
        res.status = PresolveStatus::ProvedInfeasible;
        res.infeasibility_reason = prop.reason;
        return res;
    }

    const auto n = static_cast<UnknownId>(lp.unknowns.size());
    // Surviving columns: free unknowns and every singleton that was fixed
    // (its value is re-emitted as one data row, keeping the diagonal visible
    // to rank computations instead of vanishing into the trace).
    std::vector<bool> keep(static_cast<std::size_t>(n), false);
    for (UnknownId id = 0; id < n; ++id) {
        const Cell& cell = prop.state[static_cast<std::size_t>(id)];
        if (cell.kind == Cell::Free ||
            (cell.kind == Cell::Fixed &&
             lp.unknowns.requirement(id).arity() == 1))
            keep[static_cast<std::size_t>(id)] = true;
    }

    res.reduced.env = lp.env;
    for (UnknownId id = 0; id < n; ++id)
        if (keep[static_cast<std::size_t>(id)]) {
            res.reduced.unknowns.insert(lp.unknowns.requirement(id));
            res.column_map.push_back(id);
        }
    res.reduced.unknowns.freeze();
    auto reduced_id = [&](UnknownId orig) {
        return res.reduced.unknowns.id_of(lp.unknowns.requirement(orig));
    };

    for (UnknownId id = 0; id < n; ++id) {
        const UnknownId r = prop.rep(id);
        const Cell& cell = prop.state[static_cast<std::size_t>(r)];
        if (cell.kind == Cell::Fixed)
            res.trace.fixed.emplace(id, cell.value);
        else if (r != id)
            res.trace.substitutions.emplace_back(id, r);
    }

    // Fixed singletons first, as plain data rows.
    for (UnknownId id = 0; id < n; ++id) {
        const Cell& cell = prop.state[static_cast<std::size_t>(id)];
        if (cell.kind == Cell::Fixed && keep[static_cast<std::size_t>(id)])
            res.reduced.constraints.push_back(
                {{{reduced_id(id), 1}}, cell.value, ConstraintKind::Data});
    }

    for (const LinearConstraint& row : lp.constraints) {
        std::map<UnknownId, Rational> cols;
        Rational rhs = row.rhs;
        for (const auto& term : row.terms) {
            const UnknownId r = prop.rep(term.unknown);
            const Cell& cell = prop.state[static_cast<std::size_t>(r)];
            if (cell.kind == Cell::Fixed)
                rhs -= term.coef * cell.value;
            else
                cols[r] += term.coef;
        }
        std::erase_if(cols, [](const auto& kv) { return kv.second == 0; });
        if (cols.empty()) {
            ++res.trace.eliminated_constraints;
            continue;
        }
        LinearConstraint out;
        out.kind = row.kind;
        out.rhs = rhs;
        for (const auto& [id, coef] : cols)
            out.terms.push_back({reduced_id(id), coef});
        res.reduced.constraints.push_back(std::move(out));
    }
    return res;
}

}  // namespace parith
