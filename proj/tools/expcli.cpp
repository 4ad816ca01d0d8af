#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "taskdiff/runexp.hpp"

using namespace taskdiff;

int main(int argc, char** argv) {
    CLI::App app{"difficulty lab for stochastic interactive tasks"};
    app.footer("Experiments are reproducible: (config, --seed) fixes every output byte.\n"
               "Config file fields mirror the flags; flags win. See FORMATS.md.");

    std::string command;
    app.add_option("command", command, "hardness | verify | search | instance | compose | curve");

    std::string config_path;
    app.add_option("--config", config_path, "JSON experiment config file");

    std::string task_name, task2_name, policy, out_csv, out_svg;
    double epsilon = 0, delta = 0, rstar = 0, alpha = 0, bins = 0;
    int64_t max_phase = 0, episodes = 0, tau = 0, n_seeds = 0, instances = 0, speed = 0,
            step_cap = 0;
    uint64_t seed = 0;
    bool timings = false;

    app.add_option("--task", task_name, "task name (built-in suite, numerousness, coin)");
    app.add_option("--task2", task2_name, "second task (compose)");
    app.add_option("--policy", policy, "preset:<name> or hex:<bits>");
    app.add_option("--epsilon", epsilon, "tolerance in [0,1]");
    app.add_option("--delta", delta, "confidence parameter in (0,1)");
    app.add_option("--rstar", rstar, "maximum response reference in (0,1]");
    app.add_option("--alpha", alpha, "mixture weight (compose)");
    app.add_option("--max-phase", max_phase, "search phase / program length cap in bits");
    app.add_option("--seed", seed, "master seed");
    app.add_option("--episodes", episodes, "evaluation trials per instance");
    app.add_option("--tau", tau, "ticks per episode (0: task default)");
    app.add_option("--n-seeds", n_seeds, "instance seeds per estimate");
    app.add_option("--instances", instances, "instances for instance/curve commands");
    app.add_option("--bins", bins, "curve bin width in bits");
    app.add_option("--speed", speed, "machine instructions per tick");
    app.add_option("--step-cap", step_cap, "counted-step budget per trial / verification");
    app.add_option("--out", out_csv, "output CSV path");
    app.add_option("--out-svg", out_svg, "output SVG path (curve)");
    app.add_flag("--timings", timings, "record wall-clock ms (breaks byte reproducibility)");

    CLI11_PARSE(app, argc, argv);

    try {
        ExperimentConfig cfg;
        if (!config_path.empty()) cfg = parse_config_file(config_path);
        if (!command.empty()) cfg.command = command;
        if (app.count("--task")) cfg.task = TaskSpec{task_name, {}};
        if (app.count("--task2")) cfg.task2 = TaskSpec{task2_name, {}};
        if (app.count("--policy")) cfg.policy = policy;
        if (app.count("--epsilon")) cfg.difficulty.epsilon = epsilon;
        if (app.count("--delta")) cfg.difficulty.delta = delta;
        if (app.count("--rstar")) cfg.difficulty.r_star = rstar;
        if (app.count("--alpha")) cfg.alpha = alpha;
        if (app.count("--max-phase")) cfg.difficulty.k_max = max_phase;
        if (app.count("--seed")) cfg.master_seed = seed;
        if (app.count("--episodes")) cfg.protocol.episodes = episodes;
        if (app.count("--tau")) cfg.protocol.tau = tau;
        if (app.count("--n-seeds")) cfg.difficulty.n_seeds = n_seeds;
        if (app.count("--instances")) cfg.instances = instances;
        if (app.count("--bins")) cfg.bins = bins;
        if (app.count("--speed")) cfg.protocol.machine_speed = speed;
        if (app.count("--step-cap")) cfg.protocol.step_cap = step_cap;
        if (app.count("--out")) cfg.out_csv = out_csv;
        if (app.count("--out-svg")) cfg.out_svg = out_svg;
        if (timings) cfg.timings = true;
        if (cfg.command.empty()) {
            std::cerr << "error: no command given (flag or config)\n";
            return 2;
        }
        if (cfg.task.name.empty()) {
            std::cerr << "error: no task given (flag or config)\n";
            return 2;
        }
        // one validation path for flag-built and file-built configs alike
        cfg = parse_config_text(serialize_config(cfg));
        return run_and_store(cfg);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
