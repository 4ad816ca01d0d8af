#include "taskdiff/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "taskdiff/policies.hpp"

#include <json.hpp>

namespace taskdiff {

using nlohmann::json;

namespace {

TaskParams params_from_json(const json& j, const std::string& where) {
    TaskParams params;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (v.is_number_integer()) params[it.key()] = v.get<int64_t>();
        else if (v.is_number_float()) params[it.key()] = v.get<double>();
        else if (v.is_string()) params[it.key()] = v.get<std::string>();
        else throw ParseError("field " + where + "." + it.key() + ": unsupported value type");
    }
    return params;
}

json params_to_json(const TaskParams& params) {
    json j = json::object();
    for (const auto& [key, value] : params) {
        std::visit([&](const auto& v) { j[key] = v; }, value);
    }
    return j;
}

TaskSpec task_from_json(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("name"))
        throw ParseError("field " + where + ": expected {name, params}");
    TaskSpec spec;
    spec.name = j.at("name").get<std::string>();
    if (j.contains("params")) spec.params = params_from_json(j.at("params"), where + ".params");
    return spec;
}

void check_range(bool ok, const std::string& what) {
    if (!ok) throw RangeError("config field out of range: " + what);
}

} // namespace

TaskDef make_task(const TaskSpec& spec) {
    if (spec.name == "numerousness") return make_numerousness(spec.params);
    if (spec.name == "coin") return make_coin(param_double(spec.params, "p", 0.5), spec.params);
    return make_builtin(spec.name, spec.params);
}

Program resolve_policy(const std::string& policy) {
    if (policy.rfind("preset:", 0) == 0) return policies::by_name(policy.substr(7));
    if (policy.rfind("hex:", 0) == 0) return Program::from_hex(policy.substr(4));
    throw RangeError("policy must be preset:<name> or hex:<bits>");
}

ExperimentConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config root must be an object");

    static const std::set<std::string> known = {
        "command", "task", "task2", "alpha", "epsilon", "delta", "r_star", "epsilon_grid",
        "k_max", "n_confirm", "n_seeds", "tau", "episodes", "memory_persists", "step_cap",
        "machine_speed", "master_seed", "policy", "instances", "bins", "out_csv", "out_svg",
        "timings"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) throw ParseError("unknown config field: " + it.key());

    ExperimentConfig cfg;
    try {
        cfg.command = j.at("command").get<std::string>();
        cfg.task = task_from_json(j.at("task"), "task");
        if (j.contains("task2")) cfg.task2 = task_from_json(j.at("task2"), "task2");
        if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
        if (j.contains("epsilon")) cfg.difficulty.epsilon = j.at("epsilon").get<double>();
        if (j.contains("delta")) cfg.difficulty.delta = j.at("delta").get<double>();
        if (j.contains("r_star")) cfg.difficulty.r_star = j.at("r_star").get<double>();
        if (j.contains("epsilon_grid"))
            cfg.difficulty.epsilon_grid = j.at("epsilon_grid").get<std::vector<double>>();
        if (j.contains("k_max")) cfg.difficulty.k_max = j.at("k_max").get<int64_t>();
        if (j.contains("n_confirm")) cfg.difficulty.n_confirm = j.at("n_confirm").get<int64_t>();
        if (j.contains("n_seeds")) cfg.difficulty.n_seeds = j.at("n_seeds").get<int64_t>();
        if (j.contains("tau")) cfg.protocol.tau = j.at("tau").get<int64_t>();
        if (j.contains("episodes")) cfg.protocol.episodes = j.at("episodes").get<int64_t>();
        if (j.contains("memory_persists"))
            cfg.protocol.memory_persists = j.at("memory_persists").get<bool>();
        if (j.contains("step_cap")) cfg.protocol.step_cap = j.at("step_cap").get<int64_t>();
        if (j.contains("machine_speed"))
            cfg.protocol.machine_speed = j.at("machine_speed").get<int64_t>();
        if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<uint64_t>();
        if (j.contains("policy")) cfg.policy = j.at("policy").get<std::string>();
        if (j.contains("instances")) cfg.instances = j.at("instances").get<int64_t>();
        if (j.contains("bins")) cfg.bins = j.at("bins").get<double>();
        if (j.contains("out_csv")) cfg.out_csv = j.at("out_csv").get<std::string>();
        if (j.contains("out_svg")) cfg.out_svg = j.at("out_svg").get<std::string>();
        if (j.contains("timings")) cfg.timings = j.at("timings").get<bool>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("config field error: ") + e.what());
    }

    static const std::set<std::string> commands = {"hardness", "verify", "search",
                                                   "instance", "compose", "curve"};
    if (!commands.count(cfg.command)) throw RangeError("unknown command: " + cfg.command);
    check_range(cfg.difficulty.epsilon >= 0.0 && cfg.difficulty.epsilon <= 1.0, "epsilon");
    check_range(cfg.difficulty.delta > 0.0 && cfg.difficulty.delta < 1.0, "delta");
    check_range(cfg.difficulty.r_star > 0.0 && cfg.difficulty.r_star <= 1.0, "r_star");
    check_range(cfg.alpha >= 0.0 && cfg.alpha <= 1.0, "alpha");
    check_range(cfg.difficulty.k_max >= 1 && cfg.difficulty.k_max <= 60, "k_max");
    check_range(cfg.difficulty.n_confirm >= 0, "n_confirm");
    check_range(cfg.difficulty.n_seeds >= 1, "n_seeds");
    check_range(cfg.protocol.tau >= 0, "tau");
    check_range(cfg.protocol.episodes >= 1, "episodes");
    check_range(cfg.protocol.step_cap >= 0, "step_cap");
    check_range(cfg.protocol.machine_speed >= 1, "machine_speed");
    check_range(cfg.instances >= 0, "instances");
    check_range(cfg.bins > 0.0, "bins");
    try {
        cfg.difficulty.validate();
    } catch (const std::invalid_argument& e) {
        throw RangeError(e.what());
    }
    if (cfg.command == "compose" && !cfg.task2) throw RangeError("compose requires task2");
    if ((cfg.command == "verify" || cfg.command == "curve") && cfg.policy.empty())
        throw RangeError(cfg.command + " requires a policy");
    return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string serialize_config(const ExperimentConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["task"] = {{"name", cfg.task.name}, {"params", params_to_json(cfg.task.params)}};
    if (cfg.task2)
        j["task2"] = {{"name", cfg.task2->name}, {"params", params_to_json(cfg.task2->params)}};
    j["alpha"] = cfg.alpha;
    j["epsilon"] = cfg.difficulty.epsilon;
    j["delta"] = cfg.difficulty.delta;
    j["r_star"] = cfg.difficulty.r_star;
    j["epsilon_grid"] = cfg.difficulty.epsilon_grid;
    j["k_max"] = cfg.difficulty.k_max;
    j["n_confirm"] = cfg.difficulty.n_confirm;
    j["n_seeds"] = cfg.difficulty.n_seeds;
    j["tau"] = cfg.protocol.tau;
    j["episodes"] = cfg.protocol.episodes;
    j["memory_persists"] = cfg.protocol.memory_persists;
    j["step_cap"] = cfg.protocol.step_cap;
    j["machine_speed"] = cfg.protocol.machine_speed;
    j["master_seed"] = cfg.master_seed;
    if (!cfg.policy.empty()) j["policy"] = cfg.policy;
    j["instances"] = cfg.instances;
    j["bins"] = cfg.bins;
    j["out_csv"] = cfg.out_csv;
    if (!cfg.out_svg.empty()) j["out_svg"] = cfg.out_svg;
    j["timings"] = cfg.timings;
    return j.dump(2) + "\n";
}

} // namespace taskdiff
