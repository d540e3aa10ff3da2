#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsholevo/checks.hpp"
#include "hsholevo/config.hpp"

namespace hsholevo {

struct MarginSummary {
    std::string name;
    MarginClass klass = MarginClass::Proven;
    std::uint64_t count = 0;
    std::uint64_t violations = 0;
    double min_margin = 0.0;
    double mean_margin = 0.0;
};

// Per-check aggregate. Every trial record is kept (they feed the CSV rows);
// counterexample payloads are kept for at most 16 violating trials.
struct CheckReport {
    std::string name;
    std::vector<MarginSummary> margins;
    std::vector<TrialRecord> trials;
    std::vector<std::size_t> counterexamples;

    std::uint64_t violation_count(MarginClass klass) const;
    const MarginSummary* find_margin(const std::string& margin_name) const;
};

struct VerificationReport {
    RunConfig config;
    std::string version;
    std::vector<CheckReport> checks;
    double wall_seconds = 0.0;

    std::uint64_t violation_count(MarginClass klass) const;
    const CheckReport* find_check(const std::string& check_name) const;
    // 0 clean, 1 when any proven margin was violated.
    int exit_code() const;
};

VerificationReport run_suite(const RunConfig& config);

// Side-by-side row: the purity-based bound pair and the entropy-based bound
// pair evaluated on one sampled instance.
struct CompareRow {
    std::uint64_t trial = 0;
    std::size_t n = 0;
    std::size_t q = 0;
    std::size_t blocks = 0;
    double hs_scaled_classical = 0.0;
    double hs_quantum = 0.0;
    double shannon_bits = 0.0;
    double holevo_bits = 0.0;
    bool hs_satisfied = false;
    bool shannon_satisfied = false;
};

struct CompareReport {
    RunConfig config;
    std::string version;
    std::vector<CompareRow> rows;
    double wall_seconds = 0.0;
    std::uint64_t hs_violations = 0;
    std::uint64_t shannon_violations = 0;

    int exit_code() const;
};

CompareReport run_compare(const RunConfig& config);

} // namespace hsholevo
