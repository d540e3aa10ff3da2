#include "hsholevo/config.hpp"

#include "hsholevo/complex_matrix.hpp"

namespace hsholevo {

const char* to_string(EnsembleMode mode) {
    switch (mode) {
        case EnsembleMode::Pure:
            return "pure";
        case EnsembleMode::Mixed:
            return "mixed";
        case EnsembleMode::MixedRanks:
            return "mixed-ranks";
    }
    return "unknown";
}

EnsembleMode ensemble_mode_from_string(const std::string& text) {
    if (text == "pure") {
        return EnsembleMode::Pure;
    }
    if (text == "mixed") {
        return EnsembleMode::Mixed;
    }
    if (text == "mixed-ranks") {
        return EnsembleMode::MixedRanks;
    }
    throw ValidationError(ValidationError::Kind::BadConfig,
                          "unknown ensemble mode: " + text);
}

const char* to_string(OutputFormat format) {
    return format == OutputFormat::Csv ? "csv" : "json";
}

OutputFormat output_format_from_string(const std::string& text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw ValidationError(ValidationError::Kind::BadConfig,
                          "unknown output format: " + text);
}

void RunConfig::validate() const {
    if (trials == 0) {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "trials must be positive");
    }
    if (dims_p.empty() || dims_q.empty()) {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "dimension grids must be non-empty");
    }
    std::size_t max_p = 0;
    for (std::size_t n : dims_p) {
        if (n == 0) {
            throw ValidationError(ValidationError::Kind::BadConfig,
                                  "label-space dimensions must be positive");
        }
        max_p = std::max(max_p, n);
    }
    std::size_t max_q = 0;
    for (std::size_t q : dims_q) {
        if (q == 0) {
            throw ValidationError(ValidationError::Kind::BadConfig,
                                  "signal-space dimensions must be positive");
        }
        max_q = std::max(max_q, q);
    }
    if (max_p * max_q > ComplexMatrix::max_dimension) {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "instance too large: joint dimension " +
                                  std::to_string(max_p * max_q) +
                                  " exceeds the cap");
    }
    if (!(tol_ineq > 0.0)) {
        throw ValidationError(ValidationError::Kind::BadConfig,
                              "tolerance must be positive");
    }
}

} // namespace hsholevo
