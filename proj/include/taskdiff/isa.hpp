#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace taskdiff {

// The reference machine's 16-opcode instruction set. Opcode field is 4 bits;
// each opcode has a fixed operand field layout, so the bit stream is always
// decodable left to right. A program is a sequence of instructions whose
// first HALT terminates the encoding, which makes the code prefix-free by
// construction. Every operand field is full-range, so each opcode carries
// exactly 2^-4 of Kraft mass and the whole code sums to 1.
//
// Conventions (documented once here, relied on everywhere):
//   - R0..R3 are work cells 0..3; R0 is the implicit accumulator.
//   - Indirect cell addresses and observation indices come from register
//     *values* and wrap modulo the addressed region's size.
//   - JMP/JZ targets are absolute instruction indices modulo program length.
//   - SLEEP n suspends until current_tick + n (n = 0 is a no-op sleep).
enum class Op : uint8_t {
    HALT = 0,      // stop the machine for good
    NOP = 1,
    READ_OBS = 2,  // R0 <- obs[R0 mod len]
    WRITE_ACT = 3, // emit action symbol R0
    READ_REWARD = 4, // R0 <- current reward
    READ_CLOCK = 5,  // R0 <- current virtual tick
    SLEEP = 6,       // imm4: sleep until tick + imm
    RAND_BIT = 7,    // R0 <- fresh random bit
    LOAD_IMM = 8,    // imm4: R0 <- imm
    MOV = 9,         // mode2 reg2: 0: R[r]<-R0  1: R0<-R[r]  2: cell[R[r]]<-R0  3: R0<-cell[R[r]]
    ADD = 10,        // reg2: R0 <- R0 + R[r]
    SUB = 11,        // reg2: R0 <- R0 - R[r]
    CMP = 12,        // reg2: R0 <- (R0 < R[r]) ? 1 : 0
    JMP = 13,        // target8
    JZ = 14,         // target8: jump when R0 == 0
    MEMTRIAL = 15,   // mode1 reg2: 0: R0 <- tmem[R[r] mod 64]  1: tmem[R[r] mod 64] <- R0
};

inline constexpr int kOpcodeBits = 4;
inline constexpr int kOpCount = 16;
inline constexpr int kWorkCells = 256;
inline constexpr int kTrialMemCells = 64;
inline constexpr int kMaxInstructions = 4096; // decode guard; JMP reaches the first 256

struct OpInfo {
    const char* name;
    int num_fields;
    std::array<int, 2> field_bits;
};

inline const OpInfo& op_info(Op op) {
    static const std::array<OpInfo, kOpCount> table = {{
        {"HALT", 0, {0, 0}},
        {"NOP", 0, {0, 0}},
        {"READ_OBS", 0, {0, 0}},
        {"WRITE_ACT", 0, {0, 0}},
        {"READ_REWARD", 0, {0, 0}},
        {"READ_CLOCK", 0, {0, 0}},
        {"SLEEP", 1, {4, 0}},
        {"RAND_BIT", 0, {0, 0}},
        {"LOAD_IMM", 1, {4, 0}},
        {"MOV", 2, {2, 2}},
        {"ADD", 1, {2, 0}},
        {"SUB", 1, {2, 0}},
        {"CMP", 1, {2, 0}},
        {"JMP", 1, {8, 0}},
        {"JZ", 1, {8, 0}},
        {"MEMTRIAL", 2, {1, 2}},
    }};
    return table[static_cast<size_t>(op)];
}

inline int instruction_bits(Op op) {
    const OpInfo& info = op_info(op);
    int bits = kOpcodeBits;
    for (int i = 0; i < info.num_fields; ++i) bits += info.field_bits[i];
    return bits;
}

struct Instruction {
    Op op = Op::HALT;
    std::array<uint32_t, 2> arg = {0, 0};

    int bits() const { return instruction_bits(op); }

    bool operator==(const Instruction& o) const { return op == o.op && arg == o.arg; }
};

} // namespace taskdiff
