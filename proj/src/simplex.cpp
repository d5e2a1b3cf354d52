#include "parith/simplex.hpp"

#include <cmath>
#include <optional>

#include <algorithm>
#include <cstddef>
#include <map>
#include <type_traits>
#include <unordered_map>

namespace parith {

int rank(const LpSystem& sys) {
    const std::size_t rows = sys.constraints.size();
    const std::size_t cols = sys.unknowns.size();
    std::vector<std::vector<Rational>> a(rows,
                                         std::vector<Rational>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (const auto& term : sys.constraints[i].terms)
            a[i][static_cast<std::size_t>(term.unknown)] = term.coef;

    int r = 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(r) < rows;
         ++col) {
        std::size_t pivot = static_cast<std::size_t>(r);
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[pivot]);
        const auto& prow = a[static_cast<std::size_t>(r)];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(r) || a[i][col] == 0) continue;
            const Rational f = a[i][col] / prow[col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] -= f * prow[j];
        }
        ++r;
    }
    return r;
}

namespace {

// Dense two-phase tableau over an exact or floating scalar.  Columns
// [0, cols) are the system unknowns; [cols, cols+rows) are the phase-I
// artificials, blocked from re-entering once phase II starts.
template <typename T>
class Tableau {
    using Tr = ScalarTraits<T>;

  public:
    explicit Tableau(const LpSystem& sys)
        : cols_(sys.unknowns.size()), rows_(sys.constraints.size()) {
        a_.assign(rows_, std::vector<T>(cols_ + rows_, T(0)));
        b_.assign(rows_, T(0));
        row_sign_.assign(rows_, 1);
        basis_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            const LinearConstraint& row = sys.constraints[i];
            T rhs = Tr::from(row.rhs);
            const bool flip = Tr::is_negative(rhs);
            if (flip) row_sign_[i] = -1;
            b_[i] = flip ? T(-rhs) : rhs;
            for (const auto& term : row.terms) {
                T c = Tr::from(term.coef);
                a_[i][static_cast<std::size_t>(term.unknown)] =
                    flip ? T(-c) : c;
            }
            a_[i][cols_ + i] = T(1);
            basis_[i] = cols_ + i;
        }
        row_ids_.resize(rows_);
        for (std::size_t i = 0; i < rows_; ++i) row_ids_[i] = i;
        width_ = cols_ + rows_;
    }

    // Original constraint index and basic column of every surviving row.
    std::pair<std::vector<std::size_t>, std::vector<UnknownId>>
    basis_snapshot() const {
        std::vector<UnknownId> cols(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            cols[i] = basis_[i] < cols_ ? static_cast<UnknownId>(basis_[i])
                                        : UnknownId{-1};
        return {row_ids_, cols};
    }

    // Returns false on infeasibility (phase-I optimum stays positive).
    bool phase_one(const SolveOptions& opts, BasicLpOutcome<T>& out) {
        T feasibility_slack = T(0);
        if constexpr (std::is_same_v<T, double>) {
            // The encodings are massively degenerate (most right hand sides
            // are zero) and tolerance-based pivoting cycles on them.  A tiny
            // deterministic rhs perturbation makes the vertices generic.
            // Sound for this advisory engine: a feasible point of the
            // original system absorbs the perturbation into the artificials,
            // so the perturbed phase-I optimum stays below the slack, while
            // genuine infeasibility gaps of these integer systems dwarf it.
            constexpr double delta = 1e-7;
            tb_ = b_;  // unperturbed rhs, restored after phase I
            std::uint64_t s = 0x9e3779b97f4a7c15ull;
            for (std::size_t i = 0; i < rows_; ++i) {
                s = s * 6364136223846793005ull + 1442695040888963407ull;
                b_[i] += delta * (1.0 + double(s >> 11) * 0x1.0p-53);
            }
            feasibility_slack = delta * (2.0 * double(rows_) + 4.0);
            // Snapshot for periodic refactorization (see refactorize()).
            ob_ = b_;
            oa_.assign(rows_, std::vector<T>(cols_));
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j) oa_[i][j] = a_[i][j];
        }
        // Min sum of artificials: d_j = -column sum over structural columns.
        cost_.assign(cols_ + rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) cost_[cols_ + i] = T(1);
        d_.assign(cols_ + rows_, T(0));
        z_ = T(0);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) d_[j] -= a_[i][j];
            z_ += b_[i];
        }
        blocked_ = cols_ + rows_;  // nothing blocked yet
        run(opts, out);
        if (z_ > feasibility_slack && Tr::is_positive(z_)) {
            // Farkas multipliers from the artificials' reduced costs,
            // mapped back to the original row signs.
            out.status = LpStatus::Infeasible;
            out.certificate.resize(rows_);
            for (std::size_t i = 0; i < rows_; ++i) {
                T y = T(1) - d_[cols_ + i];
                out.certificate[i] = row_sign_[i] < 0 ? T(-y) : y;
            }
            return false;
        }
        evict_artificials();
        // The artificials can never re-enter; stop carrying their columns.
        width_ = cols_;
        if constexpr (std::is_same_v<T, double>) {
            // Drop the perturbation: phase II must optimize the original
            // polytope, or its vertex drifts off the true optimum by the
            // perturbation and the exact certification rejects it.
            if (!oa_.empty()) {
                ob_ = tb_;
                refactorize();
            }
        }
        return true;
    }

    void phase_two(const LinearObjective& objective, const SolveOptions& opts,
                   BasicLpOutcome<T>& out) {
        std::vector<T> cost(width_, T(0));
        for (const auto& [id, coef] : objective)
            cost[static_cast<std::size_t>(id)] -= Tr::from(coef);  // maximize
        cost_ = cost;
        d_ = cost;
        z_ = T(0);
        for (std::size_t i = 0; i < rows_; ++i) {
            const T cb = cost[basis_[i]];
            if (Tr::is_zero(cb)) continue;
            for (std::size_t j = 0; j < width_; ++j) d_[j] -= cb * a_[i][j];
            z_ += cb * b_[i];
        }
        blocked_ = cols_;
        if (!run(opts, out)) {
            out.status = LpStatus::Unbounded;
            return;
        }
        out.status = LpStatus::Feasible;
        out.objective = T(-z_);
        extract_point(out);
    }

    void extract_point(BasicLpOutcome<T>& out) const {
        out.point.assign(cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < cols_) out.point[basis_[i]] = b_[i];
    }

  private:
    // Simplex iterations until optimal (true) or unbounded (false).
    bool run(const SolveOptions& opts, BasicLpOutcome<T>& out) {
        std::int32_t degenerate = 0;
        std::int64_t steps = 0;
        while (opts.max_pivots == 0 || steps++ < opts.max_pivots) {
            const bool bland =
                opts.pricing == Pricing::Bland ||
                (opts.pricing == Pricing::Hybrid &&
                 degenerate >= opts.degenerate_streak);
            std::size_t enter = width_;
            for (std::size_t j = 0; j < width_; ++j) {
                if (j >= blocked_ || !Tr::is_negative(d_[j])) continue;
                if (enter == width_ || (!bland && d_[j] < d_[enter]))
                    enter = j;
                if (bland) break;
            }
            if (enter == width_) return true;

            std::size_t leave = rows_;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (!Tr::is_positive(a_[i][enter])) continue;
                if (leave == rows_) {
                    leave = i;
                    continue;
                }
                const T lhs = b_[i] * a_[leave][enter];
                const T rhs = b_[leave] * a_[i][enter];
                if (lhs < rhs || (Tr::is_zero(T(lhs - rhs)) &&
                                  basis_[i] < basis_[leave]))
                    leave = i;
            }
            if (leave == rows_) return false;

            if (Tr::is_zero(b_[leave]))
                ++degenerate;
            else
                degenerate = 0;
            pivot(leave, enter);
            ++out.pivots;
            if constexpr (std::is_same_v<T, double>) {
                // Dense float tableaus accumulate roundoff with every
                // update; without periodic rebuilds from the original data
                // the noise eventually swamps the anti-degeneracy
                // perturbation and the iteration stalls.
                if (!oa_.empty() && out.pivots % 256 == 0) refactorize();
            }
        }
        // Pivot budget exhausted: report the current basis as if optimal.
        // The caller certifies every float answer exactly, so a stalled
        // basis is rejected there rather than trusted here.
        return true;
    }

    void pivot(std::size_t r, std::size_t jin) {
        const T p = a_[r][jin];
        // Pivot-row nonzeros drive every update; the tableau stays sparse
        // for a long time, so collecting them first pays off.
        nonzero_.clear();
        for (std::size_t j = 0; j < width_; ++j) {
            if (Tr::is_zero(a_[r][j])) continue;
            a_[r][j] /= p;
            nonzero_.push_back(j);
        }
        b_[r] /= p;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || Tr::is_zero(a_[i][jin])) continue;
            const T f = a_[i][jin];
            for (std::size_t j : nonzero_) a_[i][j] -= f * a_[r][j];
            a_[i][jin] = T(0);
            b_[i] -= f * b_[r];
        }
        const T f = d_[jin];
        if (!Tr::is_zero(f)) {
            for (std::size_t j : nonzero_) d_[j] -= f * a_[r][j];
            d_[jin] = T(0);
            z_ += f * b_[r];
        }
        basis_[r] = jin;
    }

    // Rebuilds the tableau as B^{-1} [A | I] from the snapshot taken at the
    // start of phase I, via dense LU of the current basis matrix.  Resets
    // the accumulated floating-point error to one factorization's worth.
    // Float engine only; a failed factorization leaves the tableau as is.
    void refactorize() {
        const std::size_t k = rows_;
        // Basis matrix in original (snapshot) row numbering.
        std::vector<std::vector<T>> lu(k, std::vector<T>(k, T(0)));
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t col = basis_[c];
            for (std::size_t r = 0; r < k; ++r)
                lu[r][c] = col < cols_
                               ? oa_[row_ids_[r]][col]
                               : T(col - cols_ == row_ids_[r] ? 1 : 0);
        }
        std::vector<std::size_t> perm(k);
        for (std::size_t i = 0; i < k; ++i) perm[i] = i;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            for (std::size_t r = c + 1; r < k; ++r)
                if (std::abs(lu[r][c]) > std::abs(lu[p][c])) p = r;
            if (std::abs(lu[p][c]) < 1e-11) return;  // basis ~singular
            std::swap(lu[c], lu[p]);
            std::swap(perm[c], perm[p]);
            const T inv = T(1) / lu[c][c];
            for (std::size_t r = c + 1; r < k; ++r) {
                const T f = lu[r][c] * inv;
                lu[r][c] = f;
                if (f == T(0)) continue;
                for (std::size_t j = c + 1; j < k; ++j) lu[r][j] -= f * lu[c][j];
            }
        }
        auto solve = [&](std::vector<T>& x) {
            std::vector<T> v(k);
            for (std::size_t i = 0; i < k; ++i) v[i] = x[perm[i]];
            for (std::size_t i = 1; i < k; ++i)
                for (std::size_t j = 0; j < i; ++j) v[i] -= lu[i][j] * v[j];
            for (std::size_t i = k; i-- > 0;) {
                for (std::size_t j = i + 1; j < k; ++j) v[i] -= lu[i][j] * v[j];
                v[i] /= lu[i][i];
            }
            x = std::move(v);
        };

        std::vector<std::vector<T>> fresh(k, std::vector<T>(width_, T(0)));
        std::vector<T> col(k);
        for (std::size_t j = 0; j < width_; ++j) {
            for (std::size_t r = 0; r < k; ++r)
                col[r] = j < cols_ ? oa_[row_ids_[r]][j]
                                   : T(j - cols_ == row_ids_[r] ? 1 : 0);
            solve(col);
            for (std::size_t r = 0; r < k; ++r) fresh[r][j] = col[r];
        }
        for (std::size_t r = 0; r < k; ++r) col[r] = ob_[row_ids_[r]];
        solve(col);
        for (std::size_t r = 0; r < k; ++r)
            b_[r] = col[r] < T(0) ? T(0) : col[r];
        for (std::size_t r = 0; r < k; ++r) {
            std::copy(fresh[r].begin(), fresh[r].end(), a_[r].begin());
            a_[r][basis_[r]] = T(1);  // exactly, against roundoff
        }
        for (std::size_t j = 0; j < width_; ++j) {
            T d = cost_[j];
            for (std::size_t r = 0; r < k; ++r) {
                const T cb = cost_[basis_[r]];
                if (cb != T(0)) d -= cb * a_[r][j];
            }
            d_[j] = d;
        }
        z_ = T(0);
        for (std::size_t r = 0; r < k; ++r) z_ += cost_[basis_[r]] * b_[r];
    }

    // After a zero-optimum phase I, pivot leftover artificials out of the
    // basis; rows with no structural support are redundant and dropped.
    void evict_artificials() {
        for (std::size_t i = rows_; i-- > 0;) {
            if (basis_[i] < cols_) continue;
            std::size_t j = 0;
            while (j < cols_ && Tr::is_zero(a_[i][j])) ++j;
            if (j < cols_) {
                pivot(i, j);
                continue;
            }
            a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
            b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
            basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            row_ids_.erase(row_ids_.begin() + static_cast<std::ptrdiff_t>(i));
            --rows_;
        }
    }

    std::size_t cols_;
    std::size_t rows_;
    std::vector<std::vector<T>> a_;
    std::vector<T> b_;
    std::vector<T> d_;  // reduced costs of the current objective
    T z_{};             // current objective value (minimization form)
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> row_ids_;
    std::vector<int> row_sign_;
    std::vector<std::size_t> nonzero_;  // pivot-row scratch
    std::vector<std::vector<T>> oa_;    // refactorization snapshot (float)
    std::vector<T> ob_;
    std::vector<T> tb_;  // unperturbed rhs (float phase I only)
    std::vector<T> cost_;  // cost vector of the phase being run
    std::size_t blocked_ = 0;  // columns >= blocked_ may not enter
    std::size_t width_ = 0;    // active column count
};

}  // namespace

template <typename T>
struct IncrementalSolver<T>::Impl {
    Tableau<T> tableau;
    SolveOptions opts;
    BasicLpOutcome<T> phase1;
    bool started = false;

    Impl(const LpSystem& sys, const SolveOptions& o) : tableau(sys), opts(o) {}
};

template <typename T>
IncrementalSolver<T>::IncrementalSolver(const LpSystem& sys,
                                        const SolveOptions& opts)
    : impl_(std::make_unique<Impl>(sys, opts)) {}

template <typename T>
IncrementalSolver<T>::~IncrementalSolver() = default;
template <typename T>
IncrementalSolver<T>::IncrementalSolver(IncrementalSolver&&) noexcept = default;
template <typename T>
IncrementalSolver<T>& IncrementalSolver<T>::operator=(
    IncrementalSolver&&) noexcept = default;

template <typename T>
const BasicLpOutcome<T>& IncrementalSolver<T>::feasibility() {
    if (!impl_->started) {
        impl_->started = true;
        if (impl_->tableau.phase_one(impl_->opts, impl_->phase1)) {
            impl_->phase1.status = LpStatus::Feasible;
            impl_->tableau.extract_point(impl_->phase1);
        }
    }
    return impl_->phase1;
}

template <typename T>
BasicLpOutcome<T> IncrementalSolver<T>::maximize(
    const LinearObjective& objective) {
    if (feasibility().status != LpStatus::Feasible)
        throw EncodingAnomaly("maximize on an infeasible solver");
    BasicLpOutcome<T> out;
    impl_->tableau.phase_two(objective, impl_->opts, out);
    return out;
}

template <typename T>
typename IncrementalSolver<T>::Basis IncrementalSolver<T>::basis() const {
    auto [rows, cols] = impl_->tableau.basis_snapshot();
    return {std::move(rows), std::move(cols)};
}

template class IncrementalSolver<Rational>;
template class IncrementalSolver<double>;

namespace {

// Particular rational solution of the (possibly rank-deficient) sparse
// system m z = rhs with ncols unknowns: Gaussian elimination with free
// pivot-row choice, free variables set to zero.  Empty result means the
// system is inconsistent.
std::optional<std::vector<Rational>> sparse_particular(
    std::vector<std::map<int, Rational>> m, std::vector<Rational> rhs,
    std::size_t ncols) {
    const std::size_t nrows = m.size();
    std::vector<std::pair<std::size_t, int>> pivots;  // (row, column)
    std::vector<bool> used(nrows, false);
    std::vector<bool> pivoted(ncols, false);
    // Eliminating with a pivot row can spread nonzeros into columns already
    // passed over as free, so keep sweeping until no column can be pivoted.
    bool progress = true;
    while (progress) {
        progress = false;
        for (int col = 0; col < static_cast<int>(ncols); ++col) {
            if (pivoted[static_cast<std::size_t>(col)]) continue;
            std::size_t pivot = nrows;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (used[i]) continue;
                auto it = m[i].find(col);
                if (it == m[i].end() || it->second == 0) continue;
                if (pivot == nrows || m[i].size() < m[pivot].size()) pivot = i;
            }
            if (pivot == nrows) continue;  // free so far
            used[pivot] = true;
            pivoted[static_cast<std::size_t>(col)] = true;
            pivots.push_back({pivot, col});
            progress = true;
            const Rational p = m[pivot].at(col);
            for (std::size_t i = 0; i < nrows; ++i) {
                if (used[i]) continue;
                auto it = m[i].find(col);
                if (it == m[i].end() || it->second == 0) continue;
                const Rational f = it->second / p;
                m[i].erase(it);
                for (const auto& [c, v] : m[pivot]) {
                    if (c == col) continue;
                    Rational& cell = m[i][c];
                    cell -= f * v;
                    if (cell == 0) m[i].erase(c);
                }
                rhs[i] -= f * rhs[pivot];
            }
        }
    }
    for (std::size_t i = 0; i < nrows; ++i)
        if (!used[i] && rhs[i] != 0) return std::nullopt;
    // Any nonzero left in a pivot row sits in a column pivoted later or
    // free (set to zero), so reverse assignment order resolves everything.
    std::vector<Rational> z(ncols, 0);
    for (std::size_t idx = pivots.size(); idx-- > 0;) {
        const auto [row, col] = pivots[idx];
        Rational acc = rhs[row];
        for (const auto& [c, v] : m[row])
            if (c != col) acc -= v * z[static_cast<std::size_t>(c)];
        z[static_cast<std::size_t>(col)] = acc / m[row].at(col);
    }
    return z;
}

}  // namespace

namespace {

// Closest rational with denominator <= max_den (Stern-Brocot descent);
// nullopt when nothing within tol.
std::optional<Rational> snap_rational(double v, long max_den, double tol) {
    if (!(v > -1e9 && v < 1e9)) return std::nullopt;
    double lo_n = 0, lo_d = 1, hi_n = 1, hi_d = 0;  // [0/1, 1/0)
    const bool neg = v < 0;
    double x = neg ? -v : v;
    const double whole = std::floor(x);
    if (whole > 1e8) return std::nullopt;
    x -= whole;
    long best_n = 0, best_d = 1;
    double best_err = x;
    for (int it = 0; it < 128; ++it) {
        const double med_n = lo_n + hi_n, med_d = lo_d + hi_d;
        if (med_d > double(max_den)) break;
        const double err = x - med_n / med_d;
        if (std::abs(err) < best_err) {
            best_err = std::abs(err);
            best_n = static_cast<long>(med_n);
            best_d = static_cast<long>(med_d);
        }
        if (err > 0) {
            lo_n = med_n;
            lo_d = med_d;
        } else if (err < 0) {
            hi_n = med_n;
            hi_d = med_d;
        } else {
            break;
        }
    }
    if (best_err > tol) return std::nullopt;
    Rational q(best_n, best_d);
    q += static_cast<long>(whole);
    return neg ? Rational(-q) : q;
}

}  // namespace

CertifiedOptimum certify_basis_optimum(
    const LpSystem& sys, const LinearObjective& objective,
    const std::vector<std::size_t>& basis_rows,
    const std::vector<UnknownId>& basis_cols,
    const std::vector<double>* point_hint) {
    // The float tableau's row bookkeeping is tolerance-based and cannot be
    // trusted (rows dropped as redundant on roundoff evidence, bases that
    // are exactly singular), so only the column proposal and the float
    // point are used as hints.  The proof is rebuilt from scratch in
    // rationals: a nonnegative point x satisfying every constraint, and
    // dual multipliers y with nonpositive reduced costs vanishing on the
    // support of x.  Complementary slackness then makes both optimal.
    (void)basis_rows;
    CertifiedOptimum res;
    const std::size_t ncols = sys.unknowns.size();
    const std::size_t nrows = sys.constraints.size();
    for (UnknownId col : basis_cols)
        if (col < 0 || col >= static_cast<UnknownId>(ncols)) return res;

    std::vector<Rational> cost(ncols, 0);
    for (const auto& [id, coef] : objective)
        cost[static_cast<std::size_t>(id)] += coef;

    // Dual multipliers with zero reduced cost on the given columns; nullopt
    // when no such y exists or some reduced cost comes out positive.
    const auto dual_on = [&](const std::vector<std::size_t>& cols)
        -> std::optional<std::vector<Rational>> {
        std::vector<int> where(ncols, -1);
        std::vector<std::map<int, Rational>> mt(cols.size());
        std::vector<Rational> cs(cols.size(), 0);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            where[cols[j]] = static_cast<int>(j);
            cs[j] = cost[cols[j]];
        }
        for (std::size_t i = 0; i < nrows; ++i)
            for (const auto& term : sys.constraints[i].terms) {
                const int w = where[static_cast<std::size_t>(term.unknown)];
                if (w >= 0) mt[static_cast<std::size_t>(w)]
                               [static_cast<int>(i)] += term.coef;
            }
        const auto y = sparse_particular(std::move(mt), std::move(cs), nrows);
        if (!y) return std::nullopt;
        std::vector<Rational> redcost = cost;
        for (std::size_t i = 0; i < nrows; ++i) {
            if ((*y)[i] == 0) continue;
            for (const auto& term : sys.constraints[i].terms)
                redcost[static_cast<std::size_t>(term.unknown)] -=
                    (*y)[i] * term.coef;
        }
        for (const Rational& r : redcost)
            if (r > 0) return std::nullopt;
        return redcost;
    };

    // Nonnegative point supported on the given columns, satisfying every
    // constraint exactly.
    const auto primal_on =
        [&](const std::vector<std::size_t>& cols)
        -> std::optional<std::vector<Rational>> {
        std::vector<int> where(ncols, -1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            where[cols[j]] = static_cast<int>(j);
        std::vector<std::map<int, Rational>> m(nrows);
        std::vector<Rational> b(nrows, 0);
        for (std::size_t i = 0; i < nrows; ++i) {
            const LinearConstraint& row = sys.constraints[i];
            b[i] = row.rhs;
            for (const auto& term : row.terms) {
                const int w = where[static_cast<std::size_t>(term.unknown)];
                if (w >= 0) m[i][w] += term.coef;
            }
        }
        auto x = sparse_particular(std::move(m), std::move(b), cols.size());
        if (!x) return std::nullopt;
        for (const Rational& v : *x)
            if (v < 0) return std::nullopt;
        std::vector<Rational> point(ncols, 0);
        for (std::size_t j = 0; j < cols.size(); ++j) point[cols[j]] = (*x)[j];
        return point;
    };

    const auto accept = [&](std::vector<Rational> point) {
        res.ok = true;
        for (std::size_t j = 0; j < ncols; ++j)
            if (cost[j] != 0) res.value += cost[j] * point[j];
        res.point = std::move(point);
    };

    // First try: snap the float point to small-denominator rationals and
    // verify it outright; the optima of these encodings are dyadic with
    // tiny denominators whenever they exist at all.  The dual is then
    // built on the snapped point's own support, which stays valid even
    // when the float engine's basis bookkeeping has drifted.
    if (point_hint && point_hint->size() == ncols) {
        std::vector<Rational> cand(ncols, 0);
        bool ok = true;
        for (std::size_t j = 0; j < ncols && ok; ++j) {
            const auto q = snap_rational((*point_hint)[j], 4096, 1e-5);
            if (!q || *q < 0)
                ok = false;
            else
                cand[j] = *q;
        }
        for (std::size_t i = 0; i < nrows && ok; ++i) {
            const LinearConstraint& row = sys.constraints[i];
            Rational lhs = 0;
            for (const auto& term : row.terms)
                lhs += term.coef * cand[static_cast<std::size_t>(term.unknown)];
            ok = lhs == row.rhs;
        }
        if (ok) {
            std::vector<std::size_t> sup;
            for (std::size_t j = 0; j < ncols; ++j)
                if (cand[j] != 0) sup.push_back(j);
            if (dual_on(sup)) {
                accept(std::move(cand));
                return res;
            }
        }
    }

    // Second try: dual on the proposed basic columns, then a primal point
    // supported on them (the float vertex) or, failing that, on the whole
    // zero-reduced-cost set, which also covers rows the float engine
    // wrongly dropped.
    std::vector<std::size_t> support;
    {
        std::vector<char> proposed(ncols, 0);
        for (UnknownId col : basis_cols)
            proposed[static_cast<std::size_t>(col)] = 1;
        for (std::size_t j = 0; j < ncols; ++j)
            if (proposed[j]) support.push_back(j);
    }
    const auto redcost = dual_on(support);
    if (!redcost) return res;

    auto point = primal_on(support);
    if (!point) {
        std::vector<std::size_t> zero_redcost;
        for (std::size_t j = 0; j < ncols; ++j)
            if ((*redcost)[j] == 0) zero_redcost.push_back(j);
        if (zero_redcost.size() > support.size())
            point = primal_on(zero_redcost);
    }
    if (!point) return res;
    accept(std::move(*point));
    return res;
}

template <typename T>
BasicLpOutcome<T> solve_feasibility(const LpSystem& sys,
                                    const SolveOptions& opts) {
    BasicLpOutcome<T> out;
    Tableau<T> tab(sys);
    if (!tab.phase_one(opts, out)) return out;
    out.status = LpStatus::Feasible;
    tab.extract_point(out);
    return out;
}

template <typename T>
BasicLpOutcome<T> maximize(const LpSystem& sys, const LinearObjective& obj,
                           const SolveOptions& opts) {
    BasicLpOutcome<T> out;
    Tableau<T> tab(sys);
    if (!tab.phase_one(opts, out)) return out;
    tab.phase_two(obj, opts, out);
    return out;
}

template <typename T>
bool satisfies(const LpSystem& sys, const std::vector<T>& point) {
    using Tr = ScalarTraits<T>;
    if (point.size() != sys.unknowns.size()) return false;
    // Float points come from a deliberately perturbed tableau, so they are
    // checked against a tolerance a couple of orders looser than the pivot
    // epsilon; rational points are checked exactly.
    const auto near_zero = [](const T& v) {
        if constexpr (std::is_same_v<T, double>)
            return v > -1e-5 && v < 1e-5;
        else
            return ScalarTraits<T>::is_zero(v);
    };
    for (const T& v : point)
        if (Tr::is_negative(v) && !near_zero(v)) return false;
    for (const LinearConstraint& row : sys.constraints) {
        T lhs = T(0);
        for (const auto& term : row.terms)
            lhs += Tr::from(term.coef) *
                   point[static_cast<std::size_t>(term.unknown)];
        if (!near_zero(T(lhs - Tr::from(row.rhs)))) return false;
    }
    return true;
}

template <typename T>
bool valid_certificate(const LpSystem& sys, const std::vector<T>& y) {
    using Tr = ScalarTraits<T>;
    if (y.size() != sys.constraints.size()) return false;
    std::vector<T> combo(sys.unknowns.size(), T(0));
    T rhs = T(0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        for (const auto& term : sys.constraints[i].terms)
            combo[static_cast<std::size_t>(term.unknown)] +=
                y[i] * Tr::from(term.coef);
        rhs += y[i] * Tr::from(sys.constraints[i].rhs);
    }
    for (const T& v : combo)
        if (Tr::is_positive(v)) return false;
    return Tr::is_positive(rhs);
}

template BasicLpOutcome<Rational> solve_feasibility<Rational>(
    const LpSystem&, const SolveOptions&);
template BasicLpOutcome<double> solve_feasibility<double>(const LpSystem&,
                                                          const SolveOptions&);
template BasicLpOutcome<Rational> maximize<Rational>(const LpSystem&,
                                                     const LinearObjective&,
                                                     const SolveOptions&);
template BasicLpOutcome<double> maximize<double>(const LpSystem&,
                                                 const LinearObjective&,
                                                 const SolveOptions&);
template bool satisfies<Rational>(const LpSystem&,
                                  const std::vector<Rational>&);
template bool satisfies<double>(const LpSystem&, const std::vector<double>&);
template bool valid_certificate<Rational>(const LpSystem&,
                                          const std::vector<Rational>&);
template bool valid_certificate<double>(const LpSystem&,
                                        const std::vector<double>&);

}  // namespace parith
