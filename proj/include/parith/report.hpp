#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace parith {

// Outcome of checking one claimed value against the generated artifact.
enum class Verdict {
    Match,
    Mismatch,
    // The claimed value disagrees with the generated one, but the generated
    // convention is internally consistent and reproduces the worked
    // examples, so the claim itself is suspected to contain a typo.
    SourceTypoSuspected,
    NotRun,
};

const char* verdict_name(Verdict v);

// One line of the verification ledger: what was claimed, what the code
// produced, and whether they agree.
struct ClaimRecord {
    std::string id;        // stable claim identifier, kebab-case
    std::string location;  // where the claimed value is stated
    std::string expected;  // the claimed value
    std::string observed;  // the generated value
    Verdict verdict = Verdict::NotRun;
};

// Which claim families to execute; disabled families still emit their
// records, marked NotRun, so the ledger always has the same shape.
struct ReportConfig {
    bool counts = true;    // closed-form size formulas vs generated systems
    bool ranks = true;     // exact matrix ranks (rational elimination)
    bool examples = true;  // small worked instances (feasibility, values)
    bool solver = true;    // factoring driver and oracle-lift checks
    // The [lo, hi] factoring sweep is expensive and off by default.
    bool run_sweep = false;
    std::int64_t sweep_lo = 4;
    std::int64_t sweep_hi = 255;
    int jobs = 1;
};

std::vector<ClaimRecord> verify_all(const ReportConfig& config = {});

// True iff no record is an unexplained Mismatch.
bool all_claims_hold(const std::vector<ClaimRecord>& records);

// One JSON object per line.
void write_records(std::ostream& os, const std::vector<ClaimRecord>& records);

// Human-readable table plus a verdict tally.
void write_table(std::ostream& os, const std::vector<ClaimRecord>& records);

}  // namespace parith
