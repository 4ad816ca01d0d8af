#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "taskdiff/enumerate.hpp"
#include "taskdiff/harness.hpp"
#include "taskdiff/stats.hpp"

namespace taskdiff {

std::vector<double> default_epsilon_grid();

struct DifficultyConfig {
    double epsilon = 0.1;
    double delta = 0.05;
    double r_star = 1.0; // maximum response reference
    std::vector<double> epsilon_grid = default_epsilon_grid();
    int64_t k_max = 14;    // maximum search phase / program length in bits
    int64_t n_confirm = 30;
    int64_t n_seeds = 64;  // instance seeds per estimate
    uint64_t eval_seed = 0;

    void validate() const; // throws std::invalid_argument
};

// total = length_bits + log_steps + log_bids, exactly. Expected steps and
// bids below 1 are clamped to 1 before the logs so a do-nothing witness
// cannot earn negative effort.
struct EffortBreakdown {
    double length_bits = 0.0;
    double log_steps = 0.0;
    double log_bids = 0.0;
    double total = kInfinity;

    bool finite() const { return total < kInfinity; }
};

EffortBreakdown effort_components(double length_bits, double steps, double bids);

// Finding effort: L(pi) + log2(expected counted steps per trial).
double els(const Program& pi, const TaskDef& mu, const TrialProtocol& proto, int64_t n_seeds,
           uint64_t eval_seed = 0);

// Expected verification bids: ceil(z^2 var / (mean + eps - r*)^2), infinite
// when the margin is not positive. Callers feeding search-style estimates
// pass the smoothed mean/variance.
double ebids(double mean, double variance, double epsilon, double delta, double r_star);

// Expected verification steps: expected steps per trial times ebids.
double everification(const Program& pi, const TaskDef& mu, const DifficultyConfig& cfg,
                     const TrialProtocol& proto);

EffortBreakdown eeffort(const Program& pi, const TaskDef& mu, const DifficultyConfig& cfg,
                        const TrialProtocol& proto);

// One estimate per enumerated program of length <= k_max; the shared input
// to the sweep-style measures below.
struct ProgramEval {
    Program program;
    ResponseEstimate est;
};
std::vector<ProgramEval> sweep_programs(const TaskDef& mu, const TrialProtocol& proto,
                                        int64_t k_max, int64_t n_seeds, uint64_t eval_seed = 0);

struct HardnessResult {
    double bits = kInfinity;
    Program witness;
    EffortBreakdown breakdown;
};

// Minimum effort over acceptable enumerated programs; ties resolved by
// enumeration order. Empty optional: exhausted (no acceptable policy
// within k_max bits).
std::optional<HardnessResult> hardness(const TaskDef& mu, const DifficultyConfig& cfg,
                                       const TrialProtocol& proto);
std::optional<HardnessResult> hardness_from_sweep(const std::vector<ProgramEval>& sweep,
                                                  const DifficultyConfig& cfg);

struct OptEntry {
    double epsilon0 = 1.0;
    std::optional<Program> witness; // empty: exhausted at this tolerance
    double els = kInfinity;
};

// Per grid tolerance (descending), the minimum-ELS acceptable policy.
std::vector<OptEntry> opt_policies(const TaskDef& mu, const TrialProtocol& proto,
                                   const std::vector<double>& epsilon_grid, int64_t k_max,
                                   int64_t n_seeds, uint64_t eval_seed = 0);
std::vector<OptEntry> opt_policies_from_sweep(const std::vector<ProgramEval>& sweep,
                                              const std::vector<double>& epsilon_grid);

// Walks the optimal-policy sweep from loose to tight tolerance and returns
// the ELS of the first witness that is epsilon-acceptable on the single
// instance mu^sigma. Empty optional: undefined (no witness covers it).
std::optional<double> instance_difficulty(uint64_t sigma, const TaskDef& mu,
                                          const DifficultyConfig& cfg, const TrialProtocol& proto);
std::optional<double> instance_difficulty_from_entries(uint64_t sigma, const TaskDef& mu,
                                                       const std::vector<OptEntry>& entries,
                                                       const DifficultyConfig& cfg,
                                                       const TrialProtocol& proto);

// d(mu1, mu2) = 2 * hardness(0.5 mix) - hardness(mu1) - hardness(mu2).
std::optional<double> distance(const TaskDef& mu1, const TaskDef& mu2,
                               const DifficultyConfig& cfg, const TrialProtocol& proto);

// mu1 covers mu2 when mixing mu2 in does not raise difficulty beyond
// hardness(mu1) + slack bits.
std::optional<bool> covers(const TaskDef& mu1, const TaskDef& mu2, const DifficultyConfig& cfg,
                           const TrialProtocol& proto, double slack_bits);

// Agent response curve: per difficulty bin, the mean acceptability
// indicator of `pi` over the given (instance, difficulty) pairs.
struct CurvePoint {
    double bin_lo = 0.0;
    double rate = 0.0;
    int64_t count = 0;
};
std::vector<CurvePoint> response_curve(const Program& pi,
                                       const std::vector<std::pair<TaskInstance, double>>& instances,
                                       double bin_width, const DifficultyConfig& cfg,
                                       const TrialProtocol& proto);

} // namespace taskdiff
