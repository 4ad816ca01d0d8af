#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "taskdiff/difficulty.hpp"
#include "taskdiff/harness.hpp"

namespace taskdiff {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TaskSpec {
    std::string name;
    TaskParams params;
};

// A fully serializable experiment description: re-running the same config
// with the same master seed reproduces every output byte.
struct ExperimentConfig {
    std::string command; // hardness | verify | search | instance | compose | curve
    TaskSpec task;
    std::optional<TaskSpec> task2; // compose only
    double alpha = 0.5;            // compose mixture weight
    DifficultyConfig difficulty;
    TrialProtocol protocol;
    uint64_t master_seed = 0;
    std::string policy;   // "preset:<name>" or "hex:<bits>"; verify/curve need one
    int64_t instances = 16;
    double bins = 2.0;    // curve bin width in bits
    std::string out_csv = "results.csv";
    std::string out_svg;  // empty: no plot
    // wall-clock timings are off by default so output stays byte-reproducible
    bool timings = false;
};

// Builds the TaskDef a TaskSpec names (built-ins, numerousness, coin).
TaskDef make_task(const TaskSpec& spec);

// Optional policy resolution: preset name or hex-encoded program bits.
Program resolve_policy(const std::string& policy);

ExperimentConfig parse_config_text(const std::string& json_text);
ExperimentConfig parse_config_file(const std::string& path);
std::string serialize_config(const ExperimentConfig& cfg);

} // namespace taskdiff
