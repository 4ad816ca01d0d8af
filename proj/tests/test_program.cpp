#include <doctest.h>

#include "taskdiff/enumerate.hpp"
#include "taskdiff/policies.hpp"
#include "taskdiff/program.hpp"

using namespace taskdiff;

TEST_CASE("single HALT is the canonical 4-bit program") {
    Program p = Program::decode(BitString::from_string("0000"));
    CHECK(p.size() == 1);
    CHECK(p.instructions()[0].op == Op::HALT);
    CHECK(p.length_bits() == kOpcodeBits);
}

TEST_CASE("decode on empty input reports incomplete code") {
    CHECK_THROWS_AS(Program::decode(BitString()), IncompleteCode);
}

TEST_CASE("decode errors mid-instruction") {
    // opcode LOAD_IMM (1000) needs a 4-bit operand that is missing
    CHECK_THROWS_AS(Program::decode(BitString::from_string("100001")), IncompleteCode);
    // stream ends before any HALT
    CHECK_THROWS_AS(Program::decode(BitString::from_string("00010001")), IncompleteCode);
}

TEST_CASE("trailing bits after a complete program violate self-delimitation") {
    CHECK_THROWS_AS(Program::decode(BitString::from_string("00000")), PrefixViolation);
    CHECK_THROWS_AS(Program::decode(BitString::from_string("0001" "0000" "1")), PrefixViolation);
}

TEST_CASE("decode / encode identity") {
    for (const char* bits : {
             "0000",                      // HALT
             "0001" "0000",               // NOP HALT
             "0110" "0011" "0000",        // SLEEP 3, HALT
             "1000" "1111" "0000",        // LOAD_IMM 15, HALT
             "1001" "10" "11" "0000",     // MOV 2,3, HALT
             "1101" "00001010" "0000",    // JMP 10, HALT
             "1111" "1" "01" "0000",      // MEMTRIAL 1,1, HALT
         }) {
        BitString b = BitString::from_string(bits);
        Program p = Program::decode(b);
        CHECK(p.bits() == b);
    }
}

TEST_CASE("operand bits that resemble HALT are not terminators") {
    // LOAD_IMM 0: operand nibble 0000 must not end the program
    BitString b = BitString::from_string("1000" "0000" "0000");
    Program p = Program::decode(b);
    CHECK(p.size() == 2);
    CHECK(p.instructions()[0].op == Op::LOAD_IMM);
}

TEST_CASE("assemble / disassemble round trip") {
    Program mc = policies::monte_carlo_darkness(10);
    Program back = Program::assemble(mc.disassemble());
    CHECK(back == mc);

    Program p = Program::assemble("READ_OBS\nWRITE_ACT # copy\nJMP 0\nHALT\n");
    CHECK(p.size() == 4);
    CHECK(p == policies::copy_loop());
}

TEST_CASE("assemble rejects malformed text") {
    CHECK_THROWS_AS(Program::assemble("FROBNICATE\nHALT"), DecodeError);
    CHECK_THROWS_AS(Program::assemble("SLEEP\nHALT"), DecodeError);
    CHECK_THROWS_AS(Program::assemble("SLEEP 16\nHALT"), DecodeError);
    CHECK_THROWS_AS(Program::assemble("HALT\nNOP\nHALT"), DecodeError); // HALT only last
    CHECK_THROWS_AS(Program::assemble("NOP"), DecodeError);             // missing HALT
}

TEST_CASE("hex serialization round trips unaligned bit lengths") {
    for (const Program& p : {policies::copy_once(), policies::adder(), policies::poller()}) {
        CHECK(Program::from_hex(p.to_hex()) == p);
        CHECK(p.length_bits() % 8 != 0); // these presets are deliberately unaligned
    }
}

TEST_CASE("decode/encode identity holds across the whole short enumeration") {
    for (const Program& p : enumerate_all(16)) {
        Program back = Program::decode(p.bits());
        CHECK(back == p);
        CHECK(back.instructions().size() == p.size());
    }
}

TEST_CASE("padded-byte decoding rejects a missing pad marker") {
    CHECK_THROWS_AS(BitString::from_padded_bytes({0x00}), std::invalid_argument);
    CHECK_THROWS_AS(BitString::from_padded_bytes({}), std::invalid_argument);
    CHECK_THROWS_AS(BitString::from_hex("zz"), std::invalid_argument);
    CHECK_THROWS_AS(BitString::from_hex("0"), std::invalid_argument);
}
