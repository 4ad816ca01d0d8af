#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "taskdiff/machine.hpp"
#include "taskdiff/rng.hpp"

namespace taskdiff {

struct UnknownTask : std::runtime_error {
    explicit UnknownTask(const std::string& name) : std::runtime_error("unknown task: " + name) {}
};
struct BadConfig : std::runtime_error {
    explicit BadConfig(const std::string& what) : std::runtime_error("bad task config: " + what) {}
};

using ParamValue = std::variant<int64_t, double, std::string>;
using TaskParams = std::map<std::string, ParamValue>;

int64_t param_int(const TaskParams& p, const std::string& key, int64_t dflt);
double param_double(const TaskParams& p, const std::string& key, double dflt);
std::string param_string(const TaskParams& p, const std::string& key, const std::string& dflt);

// One trial of a task. The harness calls on_tick(t) before the agent runs at
// tick t; emissions made there are visible to the agent in the same tick.
// Actions take effect the following tick, so episode code only reacts to
// events stamped with an earlier tick.
class Episode {
public:
    virtual ~Episode() = default;
    virtual void on_tick(int64_t tick, TapeFrame& frame, const ActionLog& actions) = 0;
    // End-of-episode response in [0, 1]; defined for every action history,
    // including an empty one.
    virtual double response(const ActionLog& actions, int64_t tau) = 0;
};

class TaskBehavior {
public:
    virtual ~TaskBehavior() = default;
    virtual std::unique_ptr<Episode> make_episode(uint64_t sigma, int64_t trial) const = 0;
};

// Immutable, shareable task definition.
struct TaskDef {
    std::string name;
    int64_t default_tau = 16;
    bool reward_channel = false;
    // When positive, the instance seed space is exactly {0 .. n-1} and
    // expectations over seeds can be enumerated instead of sampled.
    int64_t enumerable_seeds = 0;
    TaskParams params;
    std::string obs_desc;
    std::string act_desc;
    std::shared_ptr<const TaskBehavior> behavior;
};

// A task with its random source fixed by a seed. Entire stochastic behavior
// is a pure function of (task, sigma, trial index, agent actions).
class TaskInstance {
public:
    TaskInstance(TaskDef def, uint64_t sigma) : def_(std::move(def)), sigma_(sigma) {}

    const TaskDef& task() const { return def_; }
    uint64_t sigma() const { return sigma_; }

    std::unique_ptr<Episode> make_episode(int64_t trial_index) const {
        return def_.behavior->make_episode(sigma_, trial_index);
    }

private:
    TaskDef def_;
    uint64_t sigma_;
};

// Built-in suite -------------------------------------------------------------

// Relative numerousness: two rasterized dot panels, choose the one with
// fewer dots. Geometry is fixed: 4x4 cells per panel, counts uniform 1..16
// with equal pairs resampled, dot diameter uniform in [0.2, 1.0] cell units,
// 64x64 raster per panel.
TaskDef make_numerousness(const TaskParams& cfg = {});

// name is one of: imitation, guess_sequence, constant_string, addition,
// response_time, maze. Throws UnknownTask / BadConfig.
TaskDef make_builtin(const std::string& name, const TaskParams& cfg = {});

// Diagnostic task: response is a Bernoulli(p) draw, independent of actions.
TaskDef make_coin(double p, const TaskParams& cfg = {});

// Per-trial biased-coin mixture. The chosen component's episode is seeded
// exactly as it would be standalone, so an alpha=1 mixture is trial-for-trial
// identical to the left task.
TaskDef compose(const TaskDef& left, const TaskDef& right, double alpha);

} // namespace taskdiff
