#pragma once

#include <string>
#include <vector>

#include "srsim/config.hpp"
#include "srsim/spectrum.hpp"
#include "srsim/trainer.hpp"

namespace srsim {

/// Outcome of training one membership-function shape under the shared budget.
struct ShapeResult {
    MfShape shape = MfShape::triangular;
    bool completed = false;
    std::string error;  // set when completed == false

    FuzzyCompensator compensator;
    TrainingReport report;
    HarmonicSpectrum spectrum;  // of the final compensated run

    // Stroke-harmonic magnitudes, % of mean torque.
    double h12 = 0.0, h24 = 0.0, h36 = 0.0, h48 = 0.0;
    double aggregate = 0.0;  // h12 + h24 + h36 + h48, the ranking key
    int rank = 0;            // 1 = best (smallest aggregate)
};

struct ShapeComparison {
    std::vector<ShapeResult> results;  // one per shape, enum order
    std::vector<MfShape> ranking;      // completed shapes, best first
    bool bell_ranked_first = false;
};

/// Train all four shapes under identical budgets and rank them by the
/// aggregate stroke-harmonic content. A failing shape is recorded and the
/// others continue. Runs up to max_workers shapes concurrently; the result
/// is deterministic regardless of scheduling.
ShapeComparison compare_shapes(const RunConfig& cfg, int max_workers = 4);

void write_comparison_csv(const std::string& path, const ShapeComparison& cmp);

}  // namespace srsim
