#include "taskdiff/policies.hpp"

#include <map>
#include <stdexcept>

namespace taskdiff {
namespace policies {

namespace {

// Tiny builder with label patching for JMP/JZ targets.
class Asm {
public:
    Asm& emit(Op op, uint32_t a = 0, uint32_t b = 0) {
        code_.push_back({op, {a, b}});
        return *this;
    }
    int here() const { return static_cast<int>(code_.size()); }

    int jump(Op op) { // emits with a dummy target; patch() fills it in
        emit(op, 0);
        return here() - 1;
    }
    void patch(int at, int target) { code_[static_cast<size_t>(at)].arg[0] = static_cast<uint32_t>(target); }

    // R0 <- value, using ADD-doubling; needs R3 == 1 for odd bits past the MSB.
    void load_const(uint32_t value) {
        if (value <= 15) {
            emit(Op::LOAD_IMM, value);
            return;
        }
        int top = 31;
        while (((value >> top) & 1u) == 0) --top;
        emit(Op::LOAD_IMM, 1);
        for (int i = top - 1; i >= 0; --i) {
            emit(Op::ADD, 0); // double
            if ((value >> i) & 1u) emit(Op::ADD, 3);
        }
    }

    Program build() {
        emit(Op::HALT);
        return Program(code_);
    }

private:
    std::vector<Instruction> code_;
};

} // namespace

Program halt() { return Program(); }

Program copy_once() {
    return Asm().emit(Op::READ_OBS).emit(Op::WRITE_ACT).build();
}

Program copy_loop() {
    return Asm().emit(Op::READ_OBS).emit(Op::WRITE_ACT).emit(Op::JMP, 0).build();
}

Program random_choice() {
    return Asm().emit(Op::RAND_BIT).emit(Op::WRITE_ACT).build();
}

Program random_loop() {
    return Asm().emit(Op::RAND_BIT).emit(Op::WRITE_ACT).emit(Op::JMP, 0).build();
}

Program adder() {
    Asm a;
    a.emit(Op::READ_OBS);    // R0 (= 0) indexes obs[0]
    a.emit(Op::MOV, 0, 1);   // R1 <- first operand
    a.emit(Op::LOAD_IMM, 1);
    a.emit(Op::READ_OBS);    // R0 <- obs[1]
    a.emit(Op::ADD, 1);
    a.emit(Op::WRITE_ACT);
    return a.build();
}

Program rote(const std::string& digits) {
    Asm a;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("rote: digits only");
        a.emit(Op::LOAD_IMM, static_cast<uint32_t>(c - '0'));
        a.emit(Op::WRITE_ACT);
    }
    return a.build();
}

Program staircase() {
    Asm a;
    a.emit(Op::LOAD_IMM, 0);
    a.emit(Op::WRITE_ACT); // +x
    a.emit(Op::LOAD_IMM, 2);
    a.emit(Op::WRITE_ACT); // +y
    a.emit(Op::JMP, 0);
    return a.build();
}

Program poller() {
    Asm a;
    a.emit(Op::LOAD_IMM, 1);
    a.emit(Op::MOV, 0, 3); // R3 = 1
    int poll = a.here();
    a.emit(Op::READ_OBS);
    a.emit(Op::JZ, static_cast<uint32_t>(poll));
    a.emit(Op::SUB, 3); // obs is 1 + side
    a.emit(Op::WRITE_ACT);
    return a.build();
}

Program sleep_poller(int sleep_ticks) {
    if (sleep_ticks < 0 || sleep_ticks > 15) throw std::invalid_argument("sleep_ticks in 0..15");
    Asm a;
    a.emit(Op::LOAD_IMM, 1);
    a.emit(Op::MOV, 0, 3);
    int poll = a.here();
    a.emit(Op::READ_OBS);
    int to_sleep = a.jump(Op::JZ);
    a.emit(Op::SUB, 3);
    a.emit(Op::WRITE_ACT);
    int to_end = a.jump(Op::JMP); // a HALT mid-stream would end the encoding
    a.patch(to_sleep, a.here());
    a.emit(Op::SLEEP, static_cast<uint32_t>(sleep_ticks));
    a.emit(Op::JMP, static_cast<uint32_t>(poll));
    a.patch(to_end, a.here()); // the trailing HALT
    return a.build();
}

Program monte_carlo_darkness(int points) {
    if (points < 1 || points > 20000) throw std::invalid_argument("points out of range");
    Asm a;
    a.emit(Op::LOAD_IMM, 1);
    a.emit(Op::MOV, 0, 3); // R3 = constant 1

    // One pass per panel. acc starts at `base` (0 left, 1 right): after
    // twelve shift-ins it lands in [base*4096, base*4096 + 4096), which is
    // exactly the panel's pixel range. Black-sample counts go to work cell
    // 4 (left) / 5 (right).
    auto panel_pass = [&](uint32_t base, uint32_t count_cell) {
        a.load_const(static_cast<uint32_t>(points));
        a.emit(Op::MOV, 0, 2); // R2 = points remaining
        int point_top = a.here();
        a.emit(Op::LOAD_IMM, base);
        a.emit(Op::MOV, 0, 1); // R1 = acc
        for (int bit = 0; bit < 12; ++bit) {
            a.emit(Op::RAND_BIT); // R0 = b
            a.emit(Op::ADD, 1);   // R0 = b + acc
            a.emit(Op::ADD, 1);   // R0 = b + 2*acc
            a.emit(Op::MOV, 0, 1);
        }
        a.emit(Op::MOV, 1, 1); // R0 <- index
        a.emit(Op::READ_OBS);  // R0 <- pixel
        a.emit(Op::MOV, 0, 1); // R1 = pixel
        a.emit(Op::LOAD_IMM, count_cell);
        a.emit(Op::MOV, 0, 3); // borrow R3 as the address register
        a.emit(Op::MOV, 3, 3); // R0 <- cell[count_cell]
        a.emit(Op::ADD, 1);
        a.emit(Op::MOV, 2, 3); // cell[count_cell] <- R0
        a.emit(Op::LOAD_IMM, 1);
        a.emit(Op::MOV, 0, 3); // restore R3 = 1
        a.emit(Op::MOV, 1, 2);
        a.emit(Op::SUB, 3);
        a.emit(Op::MOV, 0, 2); // --points
        int done = a.jump(Op::JZ);
        a.emit(Op::JMP, static_cast<uint32_t>(point_top));
        a.patch(done, a.here());
    };
    panel_pass(0, 4);
    panel_pass(1, 5);

    // choose the panel with fewer black samples; tie goes left
    a.emit(Op::LOAD_IMM, 4);
    a.emit(Op::MOV, 0, 3);
    a.emit(Op::MOV, 3, 3); // R0 = count left
    a.emit(Op::MOV, 0, 1); // R1 = count left
    a.emit(Op::LOAD_IMM, 5);
    a.emit(Op::MOV, 0, 3);
    a.emit(Op::MOV, 3, 3); // R0 = count right
    a.emit(Op::CMP, 1);    // R0 = (right < left): 1 -> choose right
    a.emit(Op::WRITE_ACT);
    return a.build();
}

Program by_name(const std::string& name) {
    if (name == "halt") return halt();
    if (name == "copy") return copy_once();
    if (name == "copy_loop") return copy_loop();
    if (name == "random") return random_choice();
    if (name == "random_loop") return random_loop();
    if (name == "adder") return adder();
    if (name == "staircase") return staircase();
    if (name == "poller") return poller();
    if (name == "sleep_poller") return sleep_poller(3);
    if (name.rfind("mc", 0) == 0 && name.size() > 2) {
        return monte_carlo_darkness(std::stoi(name.substr(2)));
    }
    if (name.rfind("rote:", 0) == 0) return rote(name.substr(5));
    throw std::invalid_argument("unknown policy preset: " + name);
}

} // namespace policies
} // namespace taskdiff
