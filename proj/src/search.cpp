#include "taskdiff/search.hpp"

#include <cmath>

namespace taskdiff {

namespace {

// Running verification state with the {0,1} smoothing pair preloaded.
struct VerifyState {
    int64_t n = 2;
    double sum = 1.0;
    double sum_sq = 1.0;
    int64_t steps = 0;
    int64_t trials = 0;
    RunningStats step_stats;
    std::vector<int32_t> memory;

    double mean() const { return sum / static_cast<double>(n); }
    double variance() const {
        double m = mean();
        double v = sum_sq / static_cast<double>(n) - m * m;
        return v > 0.0 ? v : 0.0;
    }

    void add(double response, int64_t trial_steps) {
        ++n;
        ++trials;
        sum += response;
        sum_sq += response * response;
        steps += trial_steps;
        step_stats.add(static_cast<double>(trial_steps));
    }
};

uint64_t trial_sigma(const TaskDef& mu, uint64_t seed, int64_t j) {
    if (mu.enumerable_seeds > 0)
        return static_cast<uint64_t>(j % mu.enumerable_seeds);
    return derive(seed, StreamTag::verify, static_cast<uint64_t>(j));
}

// One verification trial: a fresh instance draw of the task, agent memory
// carried in `state`.
void run_verify_trial(VerifyState& state, const Program& pi, const TaskDef& mu,
                      const TrialProtocol& proto, uint64_t seed, int64_t remaining) {
    TaskInstance instance(mu, trial_sigma(mu, seed, state.trials));
    TrialRecord rec = run_trial(pi, state.memory, instance, 0,
                                proto.effective_tau(mu), remaining, proto.machine_speed,
                                derive(seed, StreamTag::agent, static_cast<uint64_t>(state.trials)));
    if (proto.memory_persists) state.memory = std::move(rec.memory);
    state.add(rec.response, rec.steps);
}

VerifyResult finish(const VerifyState& state, bool accepted) {
    VerifyResult r;
    r.accepted = accepted;
    r.steps = state.steps;
    r.trials = state.trials;
    r.smoothed_mean = state.mean();
    r.smoothed_variance = state.variance();
    r.mean_steps_per_trial = state.step_stats.mean();
    return r;
}

EffortBreakdown effort_from_state(const Program& pi, const VerifyState& state,
                                  const DifficultyConfig& cfg) {
    double bids = ebids(state.mean(), state.variance(), cfg.epsilon, cfg.delta, cfg.r_star);
    return effort_components(static_cast<double>(pi.length_bits()), state.step_stats.mean(), bids);
}

} // namespace

VerifyResult verify_gen(const Program& pi, const TaskDef& mu, const VerifyParams& params,
                        const TrialProtocol& proto, ProbModel model) {
    VerifyState state;
    const double threshold = params.r_star - params.epsilon;
    while (state.steps < params.s_max) {
        run_verify_trial(state, pi, mu, proto, params.seed, params.s_max - state.steps);
        double p;
        if (model == ProbModel::normal) {
            double sd = std::sqrt(state.variance() / static_cast<double>(state.n));
            p = sd > 0.0 ? normal_cdf((state.mean() - threshold) / sd)
                         : (state.mean() > threshold ? 1.0 : 0.0);
        } else {
            // Hoeffding tail on the raw mean. The bound only gives evidence
            // on one side of the threshold, so the other side is pinned at
            // one half: a nonnegative gap can never look like rejection
            // evidence, and vice versa.
            double mean = state.sum - 1.0; // remove the fabricated 1
            double n_real = static_cast<double>(state.trials);
            mean /= n_real;
            double gap = mean - threshold;
            double tail = std::exp(-2.0 * n_real * gap * gap);
            p = gap >= 0.0 ? std::max(0.5, 1.0 - tail) : std::min(0.5, tail);
        }
        if (p >= 1.0 - params.delta) return finish(state, true);
        if (p <= params.delta) return finish(state, false);
    }
    return finish(state, false);
}

VerifyResult verify_norm(const Program& pi, const TaskDef& mu, const VerifyParams& params,
                         const TrialProtocol& proto) {
    VerifyState state;
    const double z = z_quantile(params.delta);
    const double threshold = params.r_star - params.epsilon;
    while (state.steps < params.s_max) {
        run_verify_trial(state, pi, mu, proto, params.seed, params.s_max - state.steps);
        double margin = state.mean() + params.epsilon - params.r_star;
        double n0 = margin != 0.0 ? z * z * state.variance() / (margin * margin) : kInfinity;
        if (static_cast<double>(state.n) >= n0) {
            return finish(state, state.mean() > threshold);
        }
    }
    return finish(state, false);
}

ClassicOutcome levin_classic(const std::vector<int32_t>& target, int64_t max_phase,
                             uint64_t seed) {
    ClassicOutcome outcome;
    for (int64_t phase = 1; phase <= max_phase && !outcome.program; ++phase) {
        PhaseBudget budget_rule{phase};
        enumerate_programs(phase, [&](const Program& p) {
            int64_t budget = budget_rule.per_program(p.length_bits());
            StandaloneRun run = run_standalone(p, budget, seed);
            // verification: symbol-by-symbol comparison, charged to the
            // same budget as the execution
            int64_t compares = 0;
            bool equal = run.halted && run.output.size() == target.size();
            size_t upto = std::min(run.output.size(), target.size());
            for (size_t idx = 0; idx < upto; ++idx) {
                ++compares;
                if (run.output[idx] != target[idx]) {
                    equal = false;
                    break;
                }
            }
            int64_t cost = run.steps + compares;
            if (equal && cost <= budget) {
                outcome.program = p;
                outcome.phase_found = phase;
                outcome.verification_steps = cost;
                outcome.total_steps += cost;
                return false;
            }
            outcome.total_steps += std::min(cost, budget);
            return true;
        });
    }
    return outcome;
}

SearchOutcome levin_stochastic(const TaskDef& mu, const DifficultyConfig& cfg,
                               const TrialProtocol& proto, const PhaseLogger& logger) {
    cfg.validate();
    SearchOutcome outcome;
    const double z = z_quantile(cfg.delta);
    const double threshold = cfg.r_star - cfg.epsilon;

    for (int64_t phase = 1; phase <= cfg.k_max && !outcome.policy; ++phase) {
        int64_t phase_programs = 0;
        int64_t phase_steps = 0;
        int64_t program_index = 0;
        PhaseBudget budget_rule{phase};
        enumerate_programs(phase, [&](const Program& p) {
            ++phase_programs;
            ++outcome.programs_tried;
            const int64_t s_max = budget_rule.per_program(p.length_bits());
            const uint64_t seed =
                derive(cfg.eval_seed, StreamTag::verify,
                       derive(static_cast<uint64_t>(phase), static_cast<uint64_t>(program_index)));
            ++program_index;

            VerifyState state;
            bool accepted = false;
            while (state.steps < s_max) {
                run_verify_trial(state, p, mu, proto, seed, s_max - state.steps);
                double margin = state.mean() + cfg.epsilon - cfg.r_star;
                double n0 = margin != 0.0 ? z * z * state.variance() / (margin * margin) : kInfinity;
                if (static_cast<double>(state.n) >= n0) {
                    accepted = state.mean() > threshold;
                    break;
                }
            }
            if (accepted) {
                // confirmation: extra trials inside the same budget
                int64_t extra = 0;
                while (extra < cfg.n_confirm && state.steps < s_max) {
                    run_verify_trial(state, p, mu, proto, seed, s_max - state.steps);
                    ++extra;
                }
                bool confirmed = extra == cfg.n_confirm && state.mean() > threshold;
                if (confirmed) {
                    outcome.policy = p;
                    outcome.phase_found = phase;
                    outcome.verified = true;
                    outcome.effort = effort_from_state(p, state, cfg);
                }
            }
            phase_steps += state.steps;
            return !outcome.policy;
        });
        outcome.total_steps += phase_steps;
        if (logger) logger(phase, phase_programs, phase_steps);
    }
    return outcome;
}

} // namespace taskdiff
