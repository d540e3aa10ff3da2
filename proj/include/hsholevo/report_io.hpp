#pragma once

#include <ostream>
#include <string>

#include "hsholevo/suite.hpp"
#include "hsholevo/sweep.hpp"

namespace hsholevo {

// Shortest 17-significant-digit rendering; round-trips 64-bit floats.
std::string format_double(double value);

// RFC-4180 quoting: fields holding commas, quotes, or line breaks get
// wrapped, with embedded quotes doubled.
std::string csv_escape(const std::string& field);

void write_verification_csv(std::ostream& out,
                            const VerificationReport& report);
void write_verification_json(std::ostream& out,
                             const VerificationReport& report);

void write_sweep_csv(std::ostream& out, const SweepReport& report);
void write_sweep_json(std::ostream& out, const SweepReport& report);

void write_compare_csv(std::ostream& out, const CompareReport& report);
void write_compare_json(std::ostream& out, const CompareReport& report);

} // namespace hsholevo
