#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taskdiff/bits.hpp"
#include "taskdiff/isa.hpp"

namespace taskdiff {

struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Bits end in the middle of an instruction (or no HALT appears).
struct IncompleteCode : DecodeError {
    IncompleteCode() : DecodeError("incomplete program code") {}
};
// Bits remain after a complete program; valid programs are self-delimiting.
struct PrefixViolation : DecodeError {
    PrefixViolation() : DecodeError("bits remain after complete program") {}
};

// A self-delimiting policy program. `bits` re-encodes exactly to the decoded
// instruction list; length_bits() is the policy length L.
class Program {
public:
    Program() { instructions_.push_back(Instruction{}); rebuild_bits(); }

    explicit Program(std::vector<Instruction> instructions)
        : instructions_(std::move(instructions)) {
        validate();
        rebuild_bits();
    }

    // Decodes a complete program from `bits`. Throws IncompleteCode or
    // PrefixViolation.
    static Program decode(const BitString& bits);

    // Decodes one program from a prefix of `bits`; IncompleteCode only.
    // Used where trailing bits are expected (e.g. byte-padded storage).
    static Program decode_prefix(const BitString& bits, size_t* consumed);

    const std::vector<Instruction>& instructions() const { return instructions_; }
    const BitString& bits() const { return bits_; }
    int64_t length_bits() const { return static_cast<int64_t>(bits_.size()); }
    size_t size() const { return instructions_.size(); }

    std::string disassemble() const;
    // Parses the disassembly format (one instruction per line, '#' comments).
    static Program assemble(const std::string& text);

    std::string to_hex() const { return bits_.to_hex(); }
    static Program from_hex(const std::string& hex) { return decode(BitString::from_hex(hex)); }

    bool operator==(const Program& o) const { return bits_ == o.bits_; }

private:
    void validate() const;
    void rebuild_bits();

    std::vector<Instruction> instructions_;
    BitString bits_;
};

} // namespace taskdiff
