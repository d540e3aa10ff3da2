#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsholevo/errors.hpp"
#include "hsholevo/tolerances.hpp"

namespace hsholevo {

/// How signal states are drawn: rank-one projectors, full-rank states, or
/// states of a rank chosen uniformly per draw.
enum class EnsembleMode { Pure, Mixed, MixedRanks };

const char* to_string(EnsembleMode mode);
EnsembleMode ensemble_mode_from_string(const std::string& text);

enum class OutputFormat { Csv, Json };

const char* to_string(OutputFormat format);
OutputFormat output_format_from_string(const std::string& text);

/// Configuration of a verification or comparison run.
struct RunConfig {
    std::uint64_t seed = 42;
    std::uint64_t trials = 10000;
    std::vector<std::size_t> dims_p = {2, 3, 4, 5};
    std::vector<std::size_t> dims_q = {2, 3, 4, 5, 6};
    EnsembleMode mode = EnsembleMode::MixedRanks;
    double tol_ineq = tol::inequality;
    OutputFormat format = OutputFormat::Csv;
    std::string out_path;      // empty writes to stdout
    unsigned threads = 1;      // 0 selects hardware concurrency
    bool inject_violation = false;  // test hook: adds a deliberately
                                    // reversed check to exercise the
                                    // failure exit path

    /// Throws ValidationError(BadConfig) on out-of-range values.
    void validate() const;
};

} // namespace hsholevo
