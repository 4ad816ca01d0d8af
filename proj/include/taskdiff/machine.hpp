#pragma once

#include <cstdint>
#include <vector>

#include "taskdiff/program.hpp"
#include "taskdiff/rng.hpp"

namespace taskdiff {

struct ActionEvent {
    int64_t tick;
    int32_t value;
};

class ActionLog {
public:
    void append(int64_t tick, int32_t value) { events_.push_back({tick, value}); }
    const std::vector<ActionEvent>& events() const { return events_; }
    bool empty() const { return events_.empty(); }

    // Last action written strictly before `tick` — the action in effect at
    // `tick` under the one-tick action latency convention.
    int32_t in_effect_at(int64_t tick, int32_t fallback = 0) const {
        int32_t v = fallback;
        for (const ActionEvent& e : events_) {
            if (e.tick >= tick) break;
            v = e.value;
        }
        return v;
    }

    int32_t last(int32_t fallback = 0) const {
        return events_.empty() ? fallback : events_.back().value;
    }

private:
    std::vector<ActionEvent> events_;
};

// Read-only observation/reward view plus the action and randomness channels.
struct TapeFrame {
    std::vector<int32_t> obs;
    int32_t reward = 0;
};

struct TapeSet {
    const TapeFrame* frame = nullptr;
    ActionLog* actions = nullptr;
    RngStream* random = nullptr;
    int64_t tick = 0;
};

class Machine {
public:
    explicit Machine(const Program* prog)
        : prog_(prog), cells_(kWorkCells, 0), trial_mem_(kTrialMemCells, 0) {}

    void install_trial_memory(const std::vector<int32_t>& mem) {
        for (size_t i = 0; i < trial_mem_.size() && i < mem.size(); ++i) trial_mem_[i] = mem[i];
    }
    const std::vector<int32_t>& trial_memory() const { return trial_mem_; }

    bool halted() const { return halted_; }
    int64_t counted_steps() const { return counted_steps_; }
    bool sleeping(int64_t tick) const { return sleep_until_ > tick; }
    int32_t cell(size_t i) const { return cells_[i % cells_.size()]; }

    // Executes one instruction and counts it, unless halted or sleeping
    // (in which case nothing changes and nothing is counted).
    bool step(TapeSet& tapes);

private:
    static int32_t wrap32(int64_t v) { return static_cast<int32_t>(static_cast<uint32_t>(v)); }
    static size_t index_mod(int32_t v, size_t n) {
        int64_t m = static_cast<int64_t>(v) % static_cast<int64_t>(n);
        if (m < 0) m += static_cast<int64_t>(n);
        return static_cast<size_t>(m);
    }

    const Program* prog_;
    std::vector<int32_t> cells_;
    std::vector<int32_t> trial_mem_;
    size_t pc_ = 0;
    int64_t sleep_until_ = -1;
    int64_t counted_steps_ = 0;
    bool halted_ = false;
};

// Runs a program with no task attached (empty observation, zero reward):
// the setting used by the classic search over output targets.
struct StandaloneRun {
    std::vector<int32_t> output;
    int64_t steps = 0;
    bool halted = false;
};
StandaloneRun run_standalone(const Program& prog, int64_t max_steps, uint64_t rng_seed = 0);

} // namespace taskdiff
