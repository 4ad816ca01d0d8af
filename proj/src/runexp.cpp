#include "taskdiff/runexp.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "taskdiff/search.hpp"
#include "taskdiff/svg.hpp"

namespace taskdiff {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

ResultRow base_row(const ExperimentConfig& cfg, const std::string& task_name) {
    ResultRow row;
    row.task = task_name;
    row.epsilon = cfg.difficulty.epsilon;
    row.delta = cfg.difficulty.delta;
    row.r_star = cfg.difficulty.r_star;
    row.seed = cfg.master_seed;
    return row;
}

void fill_effort(ResultRow& row, const Program& witness, const EffortBreakdown& b) {
    row.policy_bits = witness.to_hex();
    row.length_bits = witness.length_bits();
    row.log_steps = b.log_steps;
    row.log_bids = b.log_bids;
    row.effort_total = b.total;
}

ResultRow hardness_row(const ExperimentConfig& cfg, const TaskDef& task,
                       const TrialProtocol& proto) {
    Timer timer;
    DifficultyConfig dc = cfg.difficulty;
    dc.eval_seed = cfg.master_seed;
    auto result = hardness(task, dc, proto);
    ResultRow row = base_row(cfg, task.name);
    if (result) {
        fill_effort(row, result->witness, result->breakdown);
        row.verified = true;
    }
    if (cfg.timings) row.wall_ms = timer.ms();
    return row;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    ExperimentResult result;
    std::ostringstream summary;

    DifficultyConfig dc = cfg.difficulty;
    dc.eval_seed = cfg.master_seed;
    TaskDef task = make_task(cfg.task);
    TrialProtocol proto = cfg.protocol;

    if (cfg.command == "hardness") {
        result.rows.push_back(hardness_row(cfg, task, proto));
        const ResultRow& row = result.rows.back();
        summary << "hardness(" << task.name << ") = "
                << (row.effort_total ? format_double(*row.effort_total) : "exhausted") << "\n";
    } else if (cfg.command == "verify") {
        Timer timer;
        Program pi = resolve_policy(cfg.policy);
        VerifyParams params{dc.epsilon, dc.delta, dc.r_star, proto.step_cap, cfg.master_seed};
        VerifyResult vr = verify_norm(pi, task, params, proto);
        ResultRow row = base_row(cfg, task.name);
        double bids = ebids(vr.smoothed_mean, vr.smoothed_variance, dc.epsilon, dc.delta, dc.r_star);
        fill_effort(row, pi,
                    effort_components(static_cast<double>(pi.length_bits()),
                                      vr.mean_steps_per_trial, bids));
        row.verified = vr.accepted;
        if (cfg.timings) row.wall_ms = timer.ms();
        result.rows.push_back(row);
        summary << "verify " << cfg.policy << " on " << task.name << ": "
                << (vr.accepted ? "TRUE" : "FALSE") << " after " << vr.trials << " trials, "
                << vr.steps << " steps\n";
    } else if (cfg.command == "search") {
        Timer timer;
        std::ostringstream log;
        SearchOutcome out = levin_stochastic(task, dc, proto,
                                             [&](int64_t phase, int64_t programs, int64_t steps) {
                                                 log << "phase=" << phase
                                                     << " programs=" << programs
                                                     << " steps=" << steps << "\n";
                                             });
        ResultRow row = base_row(cfg, task.name);
        if (out.policy) {
            fill_effort(row, *out.policy, out.effort);
            row.phase = out.phase_found;
            row.verified = out.verified;
        }
        if (cfg.timings) row.wall_ms = timer.ms();
        result.rows.push_back(row);
        summary << log.str();
        if (out.policy)
            summary << "found policy of " << out.policy->length_bits() << " bits in phase "
                    << out.phase_found << " after " << out.total_steps << " steps\n";
        else
            summary << "exhausted after phase " << dc.k_max << ", " << out.total_steps
                    << " steps\n";
    } else if (cfg.command == "instance") {
        auto entries = opt_policies(task, proto, dc.epsilon_grid, dc.k_max, dc.n_seeds,
                                    dc.eval_seed);
        for (int64_t k = 0; k < cfg.instances; ++k) {
            Timer timer;
            uint64_t sigma = task.enumerable_seeds > 0
                                 ? static_cast<uint64_t>(k % task.enumerable_seeds)
                                 : derive(cfg.master_seed, StreamTag::eval, static_cast<uint64_t>(k));
            ResultRow row = base_row(cfg, task.name);
            row.seed = sigma;
            // find the covering witness so the row can name it
            TaskInstance instance(task, sigma);
            for (const OptEntry& entry : entries) {
                if (!entry.witness) continue;
                ResponseEstimate est =
                    estimate_on_instance(*entry.witness, instance, proto, dc.eval_seed);
                if (estimate_acceptable(est, dc.epsilon)) {
                    row.policy_bits = entry.witness->to_hex();
                    row.length_bits = entry.witness->length_bits();
                    row.effort_total = entry.els; // instance difficulty = witness ELS
                    row.verified = true;
                    break;
                }
            }
            if (cfg.timings) row.wall_ms = timer.ms();
            result.rows.push_back(row);
        }
        summary << "instance difficulties for " << cfg.instances << " seeds of " << task.name
                << "\n";
    } else if (cfg.command == "compose") {
        TaskDef task2 = make_task(*cfg.task2);
        TaskDef mix = compose(task, task2, cfg.alpha);
        result.rows.push_back(hardness_row(cfg, mix, proto));
        result.rows.push_back(hardness_row(cfg, task, proto));
        result.rows.push_back(hardness_row(cfg, task2, proto));
        const auto& hm = result.rows[0].effort_total;
        const auto& h1 = result.rows[1].effort_total;
        const auto& h2 = result.rows[2].effort_total;
        if (hm && h1 && h2) {
            if (cfg.alpha == 0.5)
                summary << "distance = " << format_double(2.0 * *hm - *h1 - *h2) << " bits\n";
            summary << "covers(left,right) at 1 bit slack: " << (*hm <= *h1 + 1.0 ? "yes" : "no")
                    << "\n";
        } else {
            summary << "composition hardness exhausted\n";
        }
    } else if (cfg.command == "curve") {
        Program pi = resolve_policy(cfg.policy);
        auto entries = opt_policies(task, proto, dc.epsilon_grid, dc.k_max, dc.n_seeds,
                                    dc.eval_seed);
        std::vector<std::pair<TaskInstance, double>> measured;
        for (int64_t k = 0; k < cfg.instances; ++k) {
            uint64_t sigma = task.enumerable_seeds > 0
                                 ? static_cast<uint64_t>(k % task.enumerable_seeds)
                                 : derive(cfg.master_seed, StreamTag::eval, static_cast<uint64_t>(k));
            ResultRow row = base_row(cfg, task.name);
            row.seed = sigma;
            row.policy_bits = pi.to_hex();
            row.length_bits = pi.length_bits();
            auto h = instance_difficulty_from_entries(sigma, task, entries, dc, proto);
            TaskInstance instance(task, sigma);
            ResponseEstimate est = estimate_on_instance(pi, instance, proto, dc.eval_seed);
            row.verified = estimate_acceptable(est, dc.epsilon);
            if (h) {
                row.effort_total = *h;
                measured.emplace_back(instance, *h);
            }
            result.rows.push_back(row);
        }
        auto points = response_curve(pi, measured, cfg.bins, dc, proto);
        result.svg = curve_svg(points, "agent response curve: " + task.name);
        summary << "curve over " << measured.size() << " of " << cfg.instances
                << " instances in " << points.size() << " bins\n";
    } else {
        throw RangeError("unknown command: " + cfg.command);
    }

    for (const ResultRow& row : result.rows)
        if (row.flagged()) result.any_flagged = true;
    result.csv = rows_to_csv(result.rows);
    result.summary = summary.str();
    return result;
}

int run_and_store(const ExperimentConfig& cfg) {
    ExperimentResult result = run_experiment(cfg);
    {
        std::ofstream out(cfg.out_csv, std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + cfg.out_csv);
        out << result.csv;
    }
    if (!cfg.out_svg.empty() && !result.svg.empty()) {
        std::ofstream out(cfg.out_svg, std::ios::binary);
        if (!out) throw IoError("cannot open for writing: " + cfg.out_svg);
        out << result.svg;
    }
    std::cout << result.summary;
    return result.any_flagged ? 3 : 0;
}

} // namespace taskdiff
