#include "taskdiff/program.hpp"

#include <cstdio>
#include <sstream>

namespace taskdiff {

Program Program::decode_prefix(const BitString& bits, size_t* consumed) {
    std::vector<Instruction> out;
    size_t pos = 0;
    while (true) {
        if (out.size() >= static_cast<size_t>(kMaxInstructions)) throw IncompleteCode();
        if (pos + kOpcodeBits > bits.size()) throw IncompleteCode();
        Instruction inst;
        inst.op = static_cast<Op>(bits.read_bits(pos, kOpcodeBits));
        pos += kOpcodeBits;
        const OpInfo& info = op_info(inst.op);
        for (int f = 0; f < info.num_fields; ++f) {
            int w = info.field_bits[f];
            if (pos + w > bits.size()) throw IncompleteCode();
            inst.arg[f] = bits.read_bits(pos, w);
            pos += static_cast<size_t>(w);
        }
        out.push_back(inst);
        if (inst.op == Op::HALT) break;
    }
    if (consumed) *consumed = pos;
    Program p;
    p.instructions_ = std::move(out);
    p.rebuild_bits();
    return p;
}

Program Program::decode(const BitString& bits) {
    size_t consumed = 0;
    Program p = decode_prefix(bits, &consumed);
    if (consumed != bits.size()) throw PrefixViolation();
    return p;
}

void Program::validate() const {
    if (instructions_.empty()) throw DecodeError("empty instruction list");
    for (size_t i = 0; i < instructions_.size(); ++i) {
        const Instruction& inst = instructions_[i];
        bool is_last = i + 1 == instructions_.size();
        if ((inst.op == Op::HALT) != is_last)
            throw DecodeError("HALT must appear exactly once, as the final instruction");
        const OpInfo& info = op_info(inst.op);
        for (int f = 0; f < info.num_fields; ++f) {
            if (inst.arg[f] >> info.field_bits[f])
                throw DecodeError("operand exceeds field width");
        }
    }
    if (instructions_.size() > static_cast<size_t>(kMaxInstructions))
        throw DecodeError("program too long");
}

void Program::rebuild_bits() {
    bits_ = BitString();
    for (const Instruction& inst : instructions_) {
        bits_.append_bits(static_cast<uint32_t>(inst.op), kOpcodeBits);
        const OpInfo& info = op_info(inst.op);
        for (int f = 0; f < info.num_fields; ++f)
            bits_.append_bits(inst.arg[f], info.field_bits[f]);
    }
}

std::string Program::disassemble() const {
    std::ostringstream os;
    for (const Instruction& inst : instructions_) {
        const OpInfo& info = op_info(inst.op);
        os << info.name;
        for (int f = 0; f < info.num_fields; ++f) os << (f ? ", " : " ") << inst.arg[f];
        os << "\n";
    }
    return os.str();
}

Program Program::assemble(const std::string& text) {
    std::vector<Instruction> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;
        int found = -1;
        for (int i = 0; i < kOpCount; ++i)
            if (name == op_info(static_cast<Op>(i)).name) { found = i; break; }
        if (found < 0) throw DecodeError("unknown mnemonic: " + name);
        Instruction inst;
        inst.op = static_cast<Op>(found);
        const OpInfo& info = op_info(inst.op);
        for (int f = 0; f < info.num_fields; ++f) {
            uint32_t v;
            if (!(ls >> v)) throw DecodeError("missing operand for " + name);
            if (v >> info.field_bits[f]) throw DecodeError("operand out of range for " + name);
            inst.arg[f] = v;
        }
        out.push_back(inst);
    }
    return Program(std::move(out));
}

} // namespace taskdiff
