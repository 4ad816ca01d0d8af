#pragma once

#include <cstdint>
#include <vector>

#include "taskdiff/program.hpp"
#include "taskdiff/stats.hpp"
#include "taskdiff/task.hpp"

namespace taskdiff {

struct TrialProtocol {
    int64_t tau = 0;             // ticks per episode; 0 uses the task default
    int64_t episodes = 1;        // evaluation trials nu_E per instance
    bool memory_persists = true; // carry agent trial memory across episodes
    int64_t step_cap = 1 << 20;  // counted-step budget per trial
    int64_t machine_speed = 1;   // instructions per virtual tick

    int64_t effective_tau(const TaskDef& task) const {
        return tau > 0 ? tau : task.default_tau;
    }
};

struct TrialRecord {
    double response = 0.0;
    int64_t steps = 0;
    std::vector<int32_t> memory; // carried trial memory
    bool halted = false;         // agent halted on its own before truncation
};

// One episode: interleaves task emissions and agent execution tick by tick.
// Emissions are visible the same tick; actions take effect the next tick.
// Stops the agent at tau ticks, budget exhaustion, or halt; the episode's
// response is always produced.
TrialRecord run_trial(const Program& pi, const std::vector<int32_t>& memory,
                      const TaskInstance& instance, int64_t trial_index, int64_t tau,
                      int64_t budget, int64_t machine_speed, uint64_t agent_seed);

inline TrialRecord run_trial(const Program& pi, const std::vector<int32_t>& memory,
                             const TaskInstance& instance, int64_t trial_index,
                             const TrialProtocol& proto, uint64_t agent_seed) {
    return run_trial(pi, memory, instance, trial_index, proto.effective_tau(instance.task()),
                     proto.step_cap, proto.machine_speed, agent_seed);
}

// Monte-Carlo response estimate. No smoothing samples here; the smoothed
// accessors below derive them when verification-style estimators are needed.
struct ResponseEstimate {
    int64_t n = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased sample variance of raw responses
    double sum = 0.0;
    double sum_sq = 0.0;
    double mean_steps = 0.0; // counted steps per trial
    bool smoothed = false;

    // Estimators with the fabricated {0,1} pair included (population
    // variance, so it stays below 1/4 for responses in [0,1]).
    double smoothed_mean() const { return (sum + 1.0) / static_cast<double>(n + 2); }
    double smoothed_variance() const {
        double m = smoothed_mean();
        double v = (sum_sq + 1.0) / static_cast<double>(n + 2) - m * m;
        return v > 0.0 ? v : 0.0;
    }
};

// Mean/variance over `seeds` independent instance seeds, each running
// `episodes` consecutive trials with memory handled per the protocol.
// Tasks with an enumerable seed space are averaged over it exactly.
ResponseEstimate estimate_response(const Program& pi, const TaskDef& mu,
                                   const TrialProtocol& proto, int64_t seeds,
                                   uint64_t eval_seed = 0);

// Same, but every episode runs the one given instance (nu_E repetitions
// of that instance).
ResponseEstimate estimate_on_instance(const Program& pi, const TaskInstance& instance,
                                      const TrialProtocol& proto, uint64_t eval_seed = 0);

// Point-estimate acceptability: estimated mean response >= 1 - epsilon.
bool is_acceptable(const Program& pi, const TaskDef& mu, double epsilon,
                   const TrialProtocol& proto, int64_t seeds, uint64_t eval_seed = 0);

inline bool estimate_acceptable(const ResponseEstimate& est, double epsilon) {
    return est.mean + 1e-12 >= 1.0 - epsilon;
}

} // namespace taskdiff
