#include <doctest.h>

#include "taskdiff/machine.hpp"
#include "taskdiff/policies.hpp"

using namespace taskdiff;

namespace {

TapeSet make_tapes(TapeFrame& frame, ActionLog& log, RngStream& rng, int64_t tick = 0) {
    return TapeSet{&frame, &log, &rng, tick};
}

} // namespace

TEST_CASE("halt stops the machine and counts one step") {
    Program p = policies::halt();
    Machine m(&p);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng);
    CHECK(m.step(tapes));
    CHECK(m.halted());
    CHECK(m.counted_steps() == 1);
    CHECK(!m.step(tapes)); // stepping a halted machine is a no-op
    CHECK(m.counted_steps() == 1);
}

TEST_CASE("sleeping consumes no steps and changes nothing") {
    Program p = Program::assemble("SLEEP 5\nNOP\nHALT");
    Machine m(&p);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng, 0);
    CHECK(m.step(tapes)); // SLEEP issues, costs one step
    CHECK(m.counted_steps() == 1);
    for (int64_t t = 0; t < 5; ++t) {
        tapes.tick = t;
        CHECK(m.sleeping(t));
        CHECK(!m.step(tapes));
        CHECK(m.counted_steps() == 1);
    }
    tapes.tick = 5;
    CHECK(!m.sleeping(5));
    CHECK(m.step(tapes)); // NOP
    CHECK(m.counted_steps() == 2);
}

TEST_CASE("step-count additivity: k executed instructions cost exactly k") {
    Program p = Program::assemble("NOP\nNOP\nNOP\nNOP\nHALT");
    Machine m(&p);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng);
    for (int64_t k = 1; k <= 5; ++k) {
        m.step(tapes);
        CHECK(m.counted_steps() == k);
    }
    CHECK(m.halted());
}

TEST_CASE("arithmetic, moves and indirect cells") {
    Program p = Program::assemble(R"(
        LOAD_IMM 7
        MOV 0, 1      # R1 = 7
        LOAD_IMM 5
        ADD 1         # R0 = 12
        SUB 1         # R0 = 5
        CMP 1         # R0 = (5 < 7) = 1
        MOV 0, 2      # R2 = 1
        LOAD_IMM 9
        MOV 2, 2      # cell[R2 = 1] = 9 -> overwrites R1
        MOV 1, 1      # R0 = R1 = 9
        WRITE_ACT
        HALT
    )");
    Machine m(&p);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng);
    while (!m.halted()) m.step(tapes);
    REQUIRE(log.events().size() == 1);
    CHECK(log.events()[0].value == 9);
}

TEST_CASE("observation reads index by accumulator value, wrapped") {
    Program p = Program::assemble("LOAD_IMM 5\nREAD_OBS\nWRITE_ACT\nHALT");
    Machine m(&p);
    TapeFrame frame;
    frame.obs = {10, 20, 30}; // index 5 mod 3 = 2
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng);
    while (!m.halted()) m.step(tapes);
    CHECK(log.events()[0].value == 30);
}

TEST_CASE("random-bit replay: same seed, same run") {
    Program p = Program::assemble(R"(
        RAND_BIT
        WRITE_ACT
        RAND_BIT
        WRITE_ACT
        RAND_BIT
        WRITE_ACT
        HALT
    )");
    auto run = [&](uint64_t seed) {
        StandaloneRun r = run_standalone(p, 100, seed);
        return r.output;
    };
    CHECK(run(42) == run(42));
    bool differs = false;
    for (uint64_t s = 0; s < 32 && !differs; ++s) differs = run(s) != run(42);
    CHECK(differs);
}

TEST_CASE("memtrial persists across machine instances") {
    // write 3 to trial memory slot 0
    Program writer = Program::assemble("LOAD_IMM 3\nMEMTRIAL 1, 1\nHALT"); // tmem[R1=0] = R0
    Machine m1(&writer);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng);
    while (!m1.halted()) m1.step(tapes);

    Program reader = Program::assemble("MEMTRIAL 0, 1\nWRITE_ACT\nHALT");
    Machine m2(&reader);
    m2.install_trial_memory(m1.trial_memory());
    ActionLog log2;
    TapeSet tapes2 = make_tapes(frame, log2, rng);
    while (!m2.halted()) m2.step(tapes2);
    CHECK(log2.events()[0].value == 3);
}

TEST_CASE("jumps wrap modulo program length") {
    // JMP 200 in a 3-instruction program lands on 200 % 3 = 2 (HALT)
    Program p = Program::assemble("NOP\nJMP 200\nHALT");
    Machine m(&p);
    TapeFrame frame;
    ActionLog log;
    RngStream rng(0);
    TapeSet tapes = make_tapes(frame, log, rng);
    int64_t guard = 0;
    while (!m.halted() && guard++ < 10) m.step(tapes);
    CHECK(m.halted());
    CHECK(m.counted_steps() == 3);
}

TEST_CASE("standalone run truncates non-halting programs at the budget") {
    Program p = Program::assemble("NOP\nJMP 0\nHALT"); // spins forever
    StandaloneRun r = run_standalone(p, 57, 0);
    CHECK(!r.halted);
    CHECK(r.steps == 57);
}
