#include "taskdiff/harness.hpp"

#include <algorithm>

namespace taskdiff {

TrialRecord run_trial(const Program& pi, const std::vector<int32_t>& memory,
                      const TaskInstance& instance, int64_t trial_index, int64_t tau,
                      int64_t budget, int64_t machine_speed, uint64_t agent_seed) {
    Machine machine(&pi);
    machine.install_trial_memory(memory);
    auto episode = instance.make_episode(trial_index);

    TapeFrame frame;
    ActionLog log;
    RngStream agent_rng(
        derive(agent_seed, StreamTag::agent, derive(instance.sigma(), static_cast<uint64_t>(trial_index))));
    TapeSet tapes{&frame, &log, &agent_rng, 0};

    for (int64_t t = 0; t < tau; ++t) {
        episode->on_tick(t, frame, log);
        tapes.tick = t;
        for (int64_t k = 0; k < machine_speed; ++k) {
            if (machine.halted() || machine.counted_steps() >= budget) break;
            if (machine.sleeping(t)) break; // dormant for the rest of the tick
            machine.step(tapes);
        }
    }

    TrialRecord rec;
    rec.response = episode->response(log, tau);
    rec.steps = machine.counted_steps();
    rec.memory = machine.trial_memory();
    rec.halted = machine.halted();
    return rec;
}

namespace {

ResponseEstimate finish_estimate(const RunningStats& responses, const RunningStats& steps) {
    ResponseEstimate est;
    est.n = responses.count();
    est.mean = responses.mean();
    est.variance = responses.variance_unbiased();
    est.sum = responses.sum();
    est.sum_sq = responses.sum_sq();
    est.mean_steps = steps.mean();
    est.smoothed = false;
    return est;
}

} // namespace

ResponseEstimate estimate_response(const Program& pi, const TaskDef& mu,
                                   const TrialProtocol& proto, int64_t seeds,
                                   uint64_t eval_seed) {
    RunningStats responses, steps;
    int64_t n_sigma =
        mu.enumerable_seeds > 0 ? std::min(seeds, mu.enumerable_seeds) : seeds;
    for (int64_t k = 0; k < n_sigma; ++k) {
        uint64_t sigma = mu.enumerable_seeds > 0 ? static_cast<uint64_t>(k)
                                                 : derive(eval_seed, StreamTag::eval, static_cast<uint64_t>(k));
        TaskInstance instance(mu, sigma);
        std::vector<int32_t> mem;
        for (int64_t j = 0; j < proto.episodes; ++j) {
            TrialRecord rec = run_trial(pi, mem, instance, j, proto, eval_seed);
            if (proto.memory_persists) mem = std::move(rec.memory);
            responses.add(rec.response);
            steps.add(static_cast<double>(rec.steps));
        }
    }
    return finish_estimate(responses, steps);
}

ResponseEstimate estimate_on_instance(const Program& pi, const TaskInstance& instance,
                                      const TrialProtocol& proto, uint64_t eval_seed) {
    RunningStats responses, steps;
    std::vector<int32_t> mem;
    for (int64_t j = 0; j < proto.episodes; ++j) {
        TrialRecord rec = run_trial(pi, mem, instance, j, proto, eval_seed);
        if (proto.memory_persists) mem = std::move(rec.memory);
        responses.add(rec.response);
        steps.add(static_cast<double>(rec.steps));
    }
    return finish_estimate(responses, steps);
}

bool is_acceptable(const Program& pi, const TaskDef& mu, double epsilon,
                   const TrialProtocol& proto, int64_t seeds, uint64_t eval_seed) {
    return estimate_acceptable(estimate_response(pi, mu, proto, seeds, eval_seed), epsilon);
}

} // namespace taskdiff
