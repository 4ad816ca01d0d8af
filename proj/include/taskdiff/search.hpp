#pragma once

#include <functional>
#include <optional>

#include "taskdiff/difficulty.hpp"
#include "taskdiff/harness.hpp"

namespace taskdiff {

// Sequential accept/reject verification of a policy on a stochastic task.
struct VerifyParams {
    double epsilon = 0.1;
    double delta = 0.05;
    double r_star = 1.0;
    int64_t s_max = 1 << 20; // counted-step budget across all trials
    uint64_t seed = 0;       // verification trial stream
};

struct VerifyResult {
    bool accepted = false;
    int64_t steps = 0;
    int64_t trials = 0; // real trials run (smoothing samples not included)
    double smoothed_mean = 0.5;
    double smoothed_variance = 0.25;
    double mean_steps_per_trial = 0.0;
};

// Probability estimators for the generic verifier's stopping rule.
enum class ProbModel {
    normal,    // normal approximation on the smoothed running estimate
    hoeffding, // distribution-free tail bound on the raw running mean
};

// Generic verifier: accumulates trial responses and stops as soon as the
// estimated Pr(r* - mean <= epsilon) clears 1 - delta (accept) or falls to
// delta (reject); budget exhaustion rejects.
VerifyResult verify_gen(const Program& pi, const TaskDef& mu, const VerifyParams& params,
                        const TrialProtocol& proto, ProbModel model = ProbModel::normal);

// Normality verifier: seeds the estimate with the two fabricated responses
// {0, 1}, updates mean/variance incrementally, and decides once the sample
// count reaches the normal-approximation bound
//   n0 = z_{delta/2}^2 * var / (mean + epsilon - r*)^2,
// accepting iff the smoothed mean clears r* - epsilon.
VerifyResult verify_norm(const Program& pi, const TaskDef& mu, const VerifyParams& params,
                         const TrialProtocol& proto);

// Per-phase step allowance: 2^(phase - L) counted steps for a program of
// length L bits, halving as programs grow within the phase.
struct PhaseBudget {
    int64_t phase = 1;
    int64_t per_program(int64_t length_bits) const {
        int64_t e = phase - length_bits;
        return int64_t{1} << (e < 60 ? e : 60);
    }
};

// Classic phase-doubling search for a program whose standalone output equals
// `target`. Verification is the symbol-by-symbol comparison, counted against
// the same per-program budget 2^(phase - L).
struct ClassicOutcome {
    std::optional<Program> program;
    int64_t phase_found = 0;
    int64_t total_steps = 0;        // across the whole search
    int64_t verification_steps = 0; // execute+compare cost of the found program
};
ClassicOutcome levin_classic(const std::vector<int32_t>& target, int64_t max_phase,
                             uint64_t seed = 0);

// Stochastic-task search: per phase i, every program of length <= i gets a
// verify_norm call with budget 2^(i - L); an accepted program must survive
// n_confirm extra trials inside the same budget before the search stops.
struct SearchOutcome {
    std::optional<Program> policy;
    int64_t phase_found = 0;
    int64_t total_steps = 0;
    bool verified = false;
    EffortBreakdown effort;
    int64_t programs_tried = 0;
};

// Machine-readable per-phase progress: (phase, programs tried, steps consumed).
using PhaseLogger = std::function<void(int64_t, int64_t, int64_t)>;

SearchOutcome levin_stochastic(const TaskDef& mu, const DifficultyConfig& cfg,
                               const TrialProtocol& proto, const PhaseLogger& logger = {});

} // namespace taskdiff
