#include "taskdiff/enumerate.hpp"

#include <cmath>

namespace taskdiff {

namespace {

struct OpVariants {
    Op op;
    int bits;
    uint32_t variants; // product of operand field ranges
};

// Non-HALT opcodes in opcode order; within one opcode, flat operand index
// ascending equals lexicographic bit order because fields are written
// most-significant-first.
const std::vector<OpVariants>& nonhalt_ops() {
    static const std::vector<OpVariants> ops = [] {
        std::vector<OpVariants> v;
        for (int i = 1; i < kOpCount; ++i) {
            Op op = static_cast<Op>(i);
            const OpInfo& info = op_info(op);
            uint32_t variants = 1;
            for (int f = 0; f < info.num_fields; ++f)
                variants <<= info.field_bits[f];
            v.push_back({op, instruction_bits(op), variants});
        }
        return v;
    }();
    return ops;
}

Instruction materialize(Op op, uint32_t flat) {
    Instruction inst;
    inst.op = op;
    const OpInfo& info = op_info(op);
    for (int f = info.num_fields - 1; f >= 0; --f) {
        uint32_t range = 1u << info.field_bits[f];
        inst.arg[f] = flat % range;
        flat /= range;
    }
    return inst;
}

// reachable[r] == true iff some suffix (ending in HALT) has exactly r bits.
std::vector<char> reachable_table(int64_t max_bits) {
    std::vector<char> reach(static_cast<size_t>(max_bits + 1), 0);
    if (max_bits >= kOpcodeBits) reach[kOpcodeBits] = 1;
    for (int64_t r = kOpcodeBits + 1; r <= max_bits; ++r) {
        for (const OpVariants& ov : nonhalt_ops()) {
            if (r - ov.bits >= kOpcodeBits && reach[static_cast<size_t>(r - ov.bits)]) {
                reach[static_cast<size_t>(r)] = 1;
                break;
            }
        }
    }
    return reach;
}

struct Enumerator {
    const std::function<bool(const Program&)>& visit;
    std::vector<char> reach;
    std::vector<Instruction> prefix;
    bool stopped = false;

    // Emits all programs of exactly `remaining` more bits, lex order.
    void run(int64_t remaining) {
        if (stopped) return;
        if (remaining == kOpcodeBits) {
            prefix.push_back(Instruction{}); // HALT
            Program p(prefix);
            prefix.pop_back();
            if (!visit(p)) stopped = true;
            return;
        }
        for (const OpVariants& ov : nonhalt_ops()) {
            int64_t rest = remaining - ov.bits;
            if (rest < kOpcodeBits || !reach[static_cast<size_t>(rest)]) continue;
            for (uint32_t flat = 0; flat < ov.variants && !stopped; ++flat) {
                prefix.push_back(materialize(ov.op, flat));
                run(rest);
                prefix.pop_back();
            }
            if (stopped) return;
        }
    }
};

} // namespace

void enumerate_programs(int64_t max_bits, const std::function<bool(const Program&)>& visit) {
    if (max_bits < kOpcodeBits) return;
    Enumerator e{visit, reachable_table(max_bits), {}, false};
    for (int64_t len = kOpcodeBits; len <= max_bits && !e.stopped; ++len) {
        if (!e.reach[static_cast<size_t>(len)]) continue;
        e.run(len);
    }
}

std::vector<Program> enumerate_all(int64_t max_bits) {
    std::vector<Program> out;
    enumerate_programs(max_bits, [&](const Program& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

int64_t count_programs(int64_t max_bits) {
    int64_t n = 0;
    enumerate_programs(max_bits, [&](const Program&) {
        ++n;
        return true;
    });
    return n;
}

double kraft_mass(int64_t max_bits) {
    double mass = 0.0;
    enumerate_programs(max_bits, [&](const Program& p) {
        mass += std::ldexp(1.0, static_cast<int>(-p.length_bits()));
        return true;
    });
    return mass;
}

} // namespace taskdiff
