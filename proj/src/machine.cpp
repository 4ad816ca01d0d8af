#include "taskdiff/machine.hpp"

namespace taskdiff {

bool Machine::step(TapeSet& tapes) {
    if (halted_ || sleeping(tapes.tick)) return false;

    const Instruction& inst = prog_->instructions()[pc_];
    ++counted_steps_;
    size_t next_pc = pc_ + 1;
    const size_t n = prog_->size();

    switch (inst.op) {
        case Op::HALT:
            halted_ = true;
            next_pc = pc_;
            break;
        case Op::NOP:
            break;
        case Op::READ_OBS: {
            const auto& obs = tapes.frame->obs;
            cells_[0] = obs.empty() ? 0 : obs[index_mod(cells_[0], obs.size())];
            break;
        }
        case Op::WRITE_ACT:
            tapes.actions->append(tapes.tick, cells_[0]);
            break;
        case Op::READ_REWARD:
            cells_[0] = tapes.frame->reward;
            break;
        case Op::READ_CLOCK:
            cells_[0] = wrap32(tapes.tick);
            break;
        case Op::SLEEP:
            sleep_until_ = tapes.tick + static_cast<int64_t>(inst.arg[0]);
            break;
        case Op::RAND_BIT:
            cells_[0] = static_cast<int32_t>(tapes.random->next_bit());
            break;
        case Op::LOAD_IMM:
            cells_[0] = static_cast<int32_t>(inst.arg[0]);
            break;
        case Op::MOV: {
            uint32_t mode = inst.arg[0], reg = inst.arg[1];
            switch (mode) {
                case 0: cells_[reg] = cells_[0]; break;
                case 1: cells_[0] = cells_[reg]; break;
                case 2: cells_[index_mod(cells_[reg], cells_.size())] = cells_[0]; break;
                default: cells_[0] = cells_[index_mod(cells_[reg], cells_.size())]; break;
            }
            break;
        }
        case Op::ADD:
            cells_[0] = wrap32(static_cast<int64_t>(cells_[0]) + cells_[inst.arg[0]]);
            break;
        case Op::SUB:
            cells_[0] = wrap32(static_cast<int64_t>(cells_[0]) - cells_[inst.arg[0]]);
            break;
        case Op::CMP:
            cells_[0] = cells_[0] < cells_[inst.arg[0]] ? 1 : 0;
            break;
        case Op::JMP:
            next_pc = inst.arg[0] % n;
            break;
        case Op::JZ:
            if (cells_[0] == 0) next_pc = inst.arg[0] % n;
            break;
        case Op::MEMTRIAL: {
            size_t idx = index_mod(cells_[inst.arg[1]], trial_mem_.size());
            if (inst.arg[0] == 0) cells_[0] = trial_mem_[idx];
            else trial_mem_[idx] = cells_[0];
            break;
        }
    }
    pc_ = next_pc;
    return true;
}

StandaloneRun run_standalone(const Program& prog, int64_t max_steps, uint64_t rng_seed) {
    Machine m(&prog);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(derive(rng_seed, StreamTag::agent, 0));
    TapeSet tapes{&frame, &log, &rng, 0};
    // No task attached: one tick per loop turn, one instruction per tick.
    // Dormant sleep ticks pass without consuming steps, so they cannot spin
    // forever — re-arming a sleep always costs a counted step.
    for (int64_t tick = 0; !m.halted() && m.counted_steps() < max_steps; ++tick) {
        tapes.tick = tick;
        m.step(tapes);
    }
    StandaloneRun run;
    run.steps = m.counted_steps();
    run.halted = m.halted();
    for (const ActionEvent& e : log.events()) run.output.push_back(e.value);
    return run;
}

} // namespace taskdiff
