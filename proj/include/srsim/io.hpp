#pragma once

#include <string>

#include "srsim/control.hpp"
#include "srsim/fuzzy.hpp"
#include "srsim/spectrum.hpp"
#include "srsim/trainer.hpp"

namespace srsim {

// CSV exports. Headers are fixed; numbers are written with 17 significant
// digits so re-parsing reproduces the exact double values.

void write_trace_csv(const std::string& path, const SimulationTrace& trace);
void write_spectrum_csv(const std::string& path, const HarmonicSpectrum& spectrum);
void write_report_csv(const std::string& path, const TrainingReport& report);

/// Compensator persistence, versioned human-readable text. Load rejects
/// unknown versions and malformed files.
void save_compensator(const std::string& path, const FuzzyCompensator& fc);
FuzzyCompensator load_compensator(const std::string& path);

}  // namespace srsim
