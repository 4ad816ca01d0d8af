#pragma once

#include "taskdiff/csvio.hpp"

namespace taskdiff {

struct ExperimentResult {
    std::vector<ResultRow> rows;
    std::string csv;          // exact bytes written to out_csv
    std::string svg;          // empty unless a curve plot was requested
    std::string summary;      // human-readable one-liner(s) for stdout
    bool any_flagged = false; // exhausted/undefined rows present
};

// Runs the configured experiment and renders its outputs. Pure given the
// config (timings stay zero unless enabled). Does not touch the filesystem.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// run_experiment + write out_csv (and out_svg when set).
// Returns the process exit code: 0 ok, 3 when flagged rows are present.
int run_and_store(const ExperimentConfig& cfg);

} // namespace taskdiff
