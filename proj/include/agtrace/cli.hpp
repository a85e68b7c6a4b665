#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "agtrace/theorem.hpp"

namespace agtrace {

/// Batch description for the sweep driver. A config file is a flat
/// key=value listing of the same fields; lists are semicolon-separated.
struct SweepConfig {
    enum class Family { Corollary, Explicit, Goppa };

    std::vector<std::array<int, 3>> towers;  // (p, r, m)
    std::vector<std::string> curves = {"p1"};
    Family family = Family::Corollary;
    std::vector<std::string> divisors;  // Family::Explicit
    int goppa_count = 20;
    int goppa_deg_min = 2;
    int goppa_deg_max = 3;
    int goppa_power_max = 1;
    std::uint64_t seed = 0;
    std::string format = "csv";  // csv | json
    bool drop_zero_columns = false;
    bool include_failing_hypotheses = false;
};

SweepConfig parse_sweep_config_file(const std::string& path);
void apply_config_line(SweepConfig& cfg, const std::string& line);

struct SweepSummary {
    long long instances = 0;
    long long hypotheses_held = 0;
    long long matched = 0;
    long long mismatched_with_hypotheses = 0;  // enforced (non-boundary) mismatches
    long long mismatched_without_hypotheses = 0;
    long long boundary_flagged = 0;
    bool invariant_failure = false;

    bool ok() const { return !invariant_failure && mismatched_with_hypotheses == 0; }
};

/// Runs the sweep, writing rows to `out` (CSV with header, or a JSON array)
/// and the summary line to `err`. Deterministic for fixed config.
SweepSummary run_sweep(const SweepConfig& cfg, std::ostream& out, std::ostream& err);

/// Entry point shared by the binary and the in-process tests: argv-style
/// arguments without the program name. Returns the process exit code
/// (0 success, 1 falsified/internal failure, 2 parse error).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agtrace
