// End-to-end acceptance run: one pass/fail line per criterion, exit code =
// number of failed criteria.  Each line carries the measured wall time and a
// short observation; recorded findings (composites the procedure fails to
// factor) are printed but only hard invariants and runtime budgets fail a
// criterion.
#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parith/addition.hpp"
#include "parith/factor.hpp"
#include "parith/labeling.hpp"
#include "parith/multiplication.hpp"
#include "parith/oracle.hpp"
#include "parith/presolve.hpp"
#include "parith/simplex.hpp"

using namespace parith;

namespace {

int g_failures = 0;
std::array<std::string, 9> g_lines;  // indexed by criterion number

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

void report(int index, const std::string& title, bool pass, double seconds,
            const std::string& detail) {
    if (!pass) ++g_failures;
    std::ostringstream line;
    line << "criterion " << index << " [" << title << "] ";
    std::string text = line.str();
    if (text.size() < 56) text.resize(56, '.');
    line.str("");
    line << text << ' ' << (pass ? "PASS" : "FAIL") << "  (" << std::fixed
         << std::setprecision(1) << seconds << "s)";
    if (!detail.empty()) line << "  " << detail;
    g_lines[static_cast<std::size_t>(index)] = line.str();
    // Progress note while the run is live; the ordered table follows at the
    // end.
    std::cerr << "done: criterion " << index << (pass ? " pass" : " FAIL")
              << '\n';
}

UnknownId singleton(const LpSystem& sys, Literal l) {
    return sys.unknowns.id_of(Requirement{l});
}

// ---- criterion 1: closed-form size formulas ------------------------------

void criterion_counts() {
    Stopwatch sw;
    std::string bad;
    for (std::int32_t n = 2; n <= 16 && bad.empty(); ++n) {
        const auto want = addition_count_formulas(n);
        const auto sys = build_addition({n, {}});
        const auto got = sys.counts();
        if (static_cast<std::int64_t>(sys.unknowns.size()) != want.unknowns ||
            static_cast<std::int64_t>(
                addition_positive_unknowns(n).size()) !=
                want.positive_unknowns ||
            static_cast<std::int64_t>(got.structural) != want.structural ||
            static_cast<std::int64_t>(got.universal) != want.universal)
            bad = "addition n=" + std::to_string(n);
    }
    for (std::int32_t n = 2; n <= 12 && bad.empty(); ++n)
        for (std::int32_t m = 2; m <= 12 && bad.empty(); ++m) {
            const auto want = multiplication_count_formulas(n, m);
            const auto sys = build_multiplication({n, m, {}});
            const auto got = sys.counts();
            if (static_cast<std::int64_t>(sys.unknowns.size()) !=
                    want.unknowns ||
                static_cast<std::int64_t>(got.structural) != want.structural ||
                static_cast<std::int64_t>(got.universal) != want.universal)
                bad = "multiplication n=" + std::to_string(n) +
                      " m=" + std::to_string(m);
        }
    const double secs = sw.seconds();
    report(1, "count formulas, generated vs closed form",
           bad.empty() && secs < 10.0, secs,
           bad.empty() ? "addition n in [2,16]; multiplication (n,m) in "
                         "[2,12]^2; all exact"
                       : "first failure: " + bad);
}

// ---- criterion 2: flagship instance sizes and streamed encode ------------

void criterion_flagship() {
    Stopwatch sw;
    const auto c768 = multiplication_count_formulas(767, 384);
    const auto c1024 = multiplication_count_formulas(1023, 512);
    const bool formulas_ok =
        c768.unknowns == 8813590 &&
        c768.structural + c768.universal + (384 + 767) == 9987098 &&
        c1024.unknowns == 15683606 &&
        c1024.structural + c1024.universal + (512 + 1023) == 17772570;

    // Stream the full 768-bit product system to disk and size-check it.
    const auto path = std::filesystem::temp_directory_path() / "f768.lpsys";
    const FactoringSpec spec =
        FactoringSpec::for_integer((BigInt(1) << 767) + 1);
    Stopwatch encode_sw;
    StreamStats streamed;
    {
        std::ofstream os(path);
        streamed = encode_factoring_to_stream(spec, os);
    }
    const double encode_secs = encode_sw.seconds();
    const auto bytes = std::filesystem::file_size(path);
    std::filesystem::remove(path);
    const bool encode_ok = streamed.unknowns == 8813590 &&
                           streamed.rows == 9987098 && bytes > 0 &&
                           encode_secs < 300.0;

    std::ostringstream detail;
    detail << "counts exact; 768-bit encode: " << streamed.rows << " rows, "
           << bytes / (1024 * 1024) << " MiB in " << std::fixed
           << std::setprecision(1) << encode_secs << "s";
    report(2, "flagship sizes and 768-bit encode-to-disk",
           formulas_ok && encode_ok, sw.seconds(), detail.str());
}

// ---- criterion 3: exact ranks --------------------------------------------

void criterion_ranks() {
    struct Case {
        const char* name;
        int want;
        LpSystem sys;
    };
    std::vector<Case> cases;
    cases.push_back(
        {"0+1 rough", 11, build_addition({1, addition_input_data(1, 0, 1)})});
    cases.push_back(
        {"2+3 rough", 35, build_addition({2, addition_input_data(2, 2, 3)})});
    {
        auto pre = presolve(build_addition({2, addition_input_data(2, 2, 3)}));
        cases.push_back({"2+3 presolved", 16, std::move(pre.reduced)});
    }
    cases.push_back({"C=6", 42, build_factoring(FactoringSpec::for_integer(6))});

    bool pass = true;
    std::ostringstream detail;
    Stopwatch total;
    for (Case& c : cases) {
        Stopwatch sw;
        const int got = rank(c.sys);
        const double secs = sw.seconds();
        if (got != c.want || secs >= 10.0) pass = false;
        detail << c.name << "=" << got << " ";
    }
    report(3, "exact ranks 11/35/16/42", pass, total.seconds(), detail.str());
}

// ---- criterion 4: worked examples ----------------------------------------

Rational fixed_literal(const LpSystem& sys, const PresolveResult& pre,
                       Literal l) {
    if (auto id = sys.unknowns.find(Requirement{l}))
        if (auto it = pre.trace.fixed.find(*id); it != pre.trace.fixed.end())
            return it->second;
    return 1 - pre.trace.fixed.at(sys.unknowns.id_of(Requirement{-l}));
}

void criterion_examples() {
    Stopwatch sw;
    std::ostringstream detail;
    bool pass = true;

    {  // 2 + 3: propagation alone determines S = 5 with integral sum bits.
        const auto sys = build_addition({2, addition_input_data(2, 2, 3)});
        const auto pre = presolve(sys);
        bool ok = pre.status == PresolveStatus::Reduced;
        std::int64_t s = 0;
        if (ok) {
            const Literal bits[] = {5, 6, 8};  // S_0, S_1, top bit
            for (int i = 0; i < 3; ++i) {
                const Rational v = fixed_literal(sys, pre, bits[i]);
                if (v != 0 && v != 1) ok = false;
                if (v == 1) s |= std::int64_t{1} << i;
            }
        }
        ok = ok && s == 5;
        pass = pass && ok;
        detail << "2+3: S=" << s << (ok ? "" : " (FAIL)") << "; ";
    }
    {  // 0 - 1 is infeasible, caught both by propagation and by phase I.
        AdditionSpec spec{1, addition_sum_data(1, 0)};
        spec.data.push_back({1, 1});
        const auto sys = build_addition(spec);
        const bool ok =
            presolve(sys).status == PresolveStatus::ProvedInfeasible &&
            solve_feasibility<Rational>(sys).status == LpStatus::Infeasible;
        pass = pass && ok;
        detail << "0-1: " << (ok ? "infeasible" : "NOT infeasible") << "; ";
    }
    {  // 0 + 1 solves to S = 1.
        const auto sys = build_addition({1, addition_input_data(1, 0, 1)});
        const auto out = solve_feasibility<Rational>(sys);
        const bool ok =
            out.status == LpStatus::Feasible &&
            out.point[static_cast<std::size_t>(singleton(sys, 3))] == 1;
        pass = pass && ok;
        detail << "0+1: " << (ok ? "S=1" : "S!=1");
    }
    report(4, "worked examples 2+3, 0-1, 0+1", pass, sw.seconds(),
           detail.str());
}

// ---- criteria 5 and 7: factoring procedure -------------------------------

void criterion_small_factoring(const SweepSummary& s) {
    Stopwatch sw;
    bool pass = true;
    std::ostringstream detail;

    // factor(6) must produce {2, 3}.
    {
        const FactorResult r = factor(6);
        const bool ok = r.status == FactorStatus::Composite &&
                        ((r.A == 2 && r.B == 3) || (r.A == 3 && r.B == 2));
        pass = pass && ok;
        detail << "factor(6)=" << r.A.str() << "x" << r.B.str() << "; ";
    }

    // Hard invariant on [4,64]: a Composite answer is always a true
    // nontrivial factorization, and 5 and 7 are never called composite.
    // Composites the procedure misses are recorded findings, not failures.
    std::vector<std::string> missed;
    for (const SweepRow& row : s.rows) {
        if (row.C > 64) break;
        if (row.status == FactorStatus::Composite &&
            (row.A * row.B != row.C || row.A <= 1 || row.B <= 1)) {
            pass = false;
            detail << "false factors at C=" << row.C.str() << "; ";
        }
        if (row.status == FactorStatus::Discrepancy) {
            pass = false;
            detail << "discrepancy at C=" << row.C.str() << "; ";
        }
        if ((row.C == 5 || row.C == 7) &&
            row.status == FactorStatus::Composite) {
            pass = false;
            detail << "prime " << row.C.str() << " called composite; ";
        }
        if (row.oracle_composite && row.status != FactorStatus::Composite)
            missed.push_back(row.C.str());
    }
    detail << "no false factors on [4,64]";
    if (!missed.empty()) {
        detail << "; missed composites (recorded): ";
        for (std::size_t i = 0; i < missed.size(); ++i)
            detail << (i ? "," : "") << missed[i];
    }

    // The C=5 system admits the documented half-integral point.
    {
        auto sys = build_factoring(FactoringSpec::for_integer(5));
        const std::pair<Literal, Rational> pins[] = {
            {9, 1}, {11, 1}, {10, Rational(1) / 2}, {12, Rational(1) / 2}};
        for (const auto& [lit, value] : pins)
            sys.constraints.push_back({{{singleton(sys, lit), 1}},
                                       value,
                                       ConstraintKind::Data});
        const bool ok =
            solve_feasibility<Rational>(sys).status == LpStatus::Feasible;
        pass = pass && ok;
        detail << "; C=5 half-point " << (ok ? "feasible" : "INFEASIBLE");
    }
    report(5, "small factoring invariants", pass, sw.seconds(), detail.str());
}

SweepSummary criterion_sweep() {
    Stopwatch sw;
    const SweepSummary s = sweep(4, 255);
    const double secs = sw.seconds();
    std::ostringstream detail;
    detail << "composites factored " << s.composite_found << ", missed "
           << s.composite_missed << ", primes confirmed " << s.prime_confirmed
           << ", discrepancies " << s.discrepancies << " (exit code "
           << (s.discrepancies > 0 ? 2 : 0) << ")";
    const bool pass = secs < 1800.0 &&
                      s.composite_found + s.composite_missed +
                              s.prime_confirmed + s.discrepancies ==
                          static_cast<std::int64_t>(s.rows.size());
    report(7, "falsification sweep [4,255]", pass, secs, detail.str());
    return s;
}

// ---- criterion 6: oracle equivalence -------------------------------------

void criterion_oracle() {
    Stopwatch sw;
    bool lifts_ok = true;
    for (std::int32_t n = 1; n <= 3 && lifts_ok; ++n)
        for (std::uint64_t u = 0; lifts_ok && u >> n == 0; ++u)
            for (std::uint64_t v = 0; lifts_ok && v >> n == 0; ++v) {
                const auto sys =
                    build_addition({n, addition_input_data(n, u, v)});
                lifts_ok =
                    satisfies(sys, lift(addition_assignment(n, u, v), sys));
            }

    // Vertex probing on the 48-column C=6 system: maximize a batch of
    // deterministic pseudo-random objectives exactly; every vertex whose
    // singleton unknowns are integral must decode to a true factorization.
    const auto sys = build_factoring(FactoringSpec::for_integer(6));
    std::mt19937 rng(20240824);
    std::uniform_int_distribution<int> coef(-5, 5);
    int integral_vertices = 0;
    bool vertices_ok = true;
    for (int trial = 0; trial < 40 && vertices_ok; ++trial) {
        LinearObjective obj;
        for (UnknownId id = 0;
             id < static_cast<UnknownId>(sys.unknowns.size()); ++id) {
            const int c = coef(rng);
            if (c != 0) obj.push_back({id, c});
        }
        const auto out = maximize<Rational>(sys, obj, {Pricing::Bland});
        if (out.status != LpStatus::Feasible) {
            vertices_ok = false;
            break;
        }
        if (!classify_solution(out.point, sys).integral) continue;
        ++integral_vertices;
        auto bit = [&](Literal l) {
            return out.point[static_cast<std::size_t>(singleton(sys, l))] == 1
                       ? 1
                       : 0;
        };
        const std::int64_t a = bit(9) + 2 * bit(10);   // A_0, A_1
        const std::int64_t b = bit(11) + 2 * bit(12);  // B_0, B_1
        vertices_ok = a * b == 6;
    }
    std::ostringstream detail;
    detail << "all lifts exact for n<=3; " << integral_vertices
           << " integral vertices probed on C=6, all factor 6";
    report(6, "brute-force oracle equivalence",
           lifts_ok && vertices_ok && integral_vertices > 0, sw.seconds(),
           detail.str());
}

// ---- criterion 8: exact/float status agreement ---------------------------

void criterion_float_agreement() {
    Stopwatch sw;
    const SolveOptions fast{Pricing::Hybrid};
    bool pass = true;
    int checked = 0;
    std::ostringstream detail;

    auto agree = [&](const LpSystem& sys, const std::string& name) {
        const auto exact = solve_feasibility<Rational>(sys, fast).status;
        const auto approx = solve_feasibility<double>(sys, fast).status;
        ++checked;
        if (exact != approx) {
            pass = false;
            detail << "disagree on " << name << "; ";
        }
    };

    // Desk instances of criteria 3 and 4, rough systems.
    agree(build_addition({1, addition_input_data(1, 0, 1)}), "0+1");
    agree(build_addition({2, addition_input_data(2, 2, 3)}), "2+3");
    {
        AdditionSpec spec{1, addition_sum_data(1, 0)};
        spec.data.push_back({1, 1});
        agree(build_addition(spec), "0-1");
    }
    agree(build_factoring(FactoringSpec::for_integer(6)), "C=6");
    agree(build_factoring(FactoringSpec::for_integer(5)), "C=5");

    // Criterion 6 instances: every addition system with n <= 3.
    for (std::int32_t n = 1; n <= 3 && pass; ++n)
        for (std::uint64_t u = 0; pass && u >> n == 0; ++u)
            for (std::uint64_t v = 0; pass && v >> n == 0; ++v)
                agree(build_addition({n, addition_input_data(n, u, v)}),
                      "addition " + std::to_string(u) + "+" +
                          std::to_string(v));

    // Criterion 5 instances: the systems the factoring driver actually
    // solves for C in [4,64] (post-propagation; propagation-proved
    // infeasibility needs no LP and both engines agree trivially).
    for (std::int64_t c = 4; c <= 64 && pass; ++c) {
        auto pre = presolve(build_factoring(FactoringSpec::for_integer(c)));
        if (pre.status != PresolveStatus::Reduced) continue;
        agree(pre.reduced, "C=" + std::to_string(c));
    }

    detail << checked << " instances compared";
    report(8, "exact/float feasibility agreement", pass, sw.seconds(),
           detail.str());
}

}  // namespace

int main() {
    std::cout << "acceptance run\n";
    criterion_counts();
    criterion_flagship();
    criterion_ranks();
    criterion_examples();
    const SweepSummary s = criterion_sweep();
    criterion_small_factoring(s);
    criterion_oracle();
    criterion_float_agreement();
    for (int i = 1; i <= 8; ++i)
        std::cout << g_lines[static_cast<std::size_t>(i)] << '\n';
    std::cout << (g_failures == 0 ? "all criteria hold"
                                  : std::to_string(g_failures) +
                                        " criteria failed")
              << '\n';
    return g_failures;
}
