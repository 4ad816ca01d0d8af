#include <doctest.h>

#include <set>

#include "taskdiff/enumerate.hpp"

using namespace taskdiff;

namespace {

// Independent oracle: decode every bitstring of length 1..max_bits and keep
// the ones that decode cleanly.
std::vector<BitString> brute_force_valid(int max_bits) {
    std::vector<BitString> valid;
    for (int len = 1; len <= max_bits; ++len) {
        for (uint64_t v = 0; v < (uint64_t{1} << len); ++v) {
            BitString b;
            for (int i = len - 1; i >= 0; --i) b.push_back((v >> i) & 1);
            try {
                Program::decode(b);
                valid.push_back(b);
            } catch (const DecodeError&) {
            }
        }
    }
    return valid;
}

} // namespace

TEST_CASE("first yielded program is the shortest valid program") {
    std::vector<Program> got;
    enumerate_programs(14, [&](const Program& p) {
        got.push_back(p);
        return got.size() < 3;
    });
    REQUIRE(!got.empty());
    CHECK(got[0].size() == 1);
    CHECK(got[0].instructions()[0].op == Op::HALT);
    CHECK(got[0].length_bits() == 4);
}

TEST_CASE("enumeration is (length, lex) ordered with no duplicates") {
    std::vector<Program> all = enumerate_all(14);
    std::set<std::string> seen;
    for (size_t i = 0; i < all.size(); ++i) {
        CHECK(seen.insert(all[i].bits().to_string()).second);
        if (i > 0) CHECK(all[i - 1].bits().length_lex_less(all[i].bits()));
    }
    // lengths nondecreasing follows from length-lex order
}

TEST_CASE("enumeration matches exhaustive decode of all short bitstrings") {
    // every bitstring of <= 12 bits, decoded
    std::vector<BitString> expected = brute_force_valid(12);
    std::vector<Program> got = enumerate_all(12);
    REQUIRE(got.size() == expected.size());
    CHECK(count_programs(12) == static_cast<int64_t>(expected.size()));
    // same sets
    std::set<std::string> a, b;
    for (const auto& bits : expected) a.insert(bits.to_string());
    for (const auto& p : got) b.insert(p.bits().to_string());
    CHECK(a == b);
}

TEST_CASE("prefix-freeness, exhaustive to 14 bits") {
    std::vector<Program> all = enumerate_all(14);
    for (size_t i = 0; i < all.size(); ++i) {
        for (size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            CHECK(!all[i].bits().is_prefix_of(all[j].bits()));
        }
    }
}

TEST_CASE("kraft mass stays below one") {
    double prev = 0.0;
    for (int n : {4, 8, 10, 12, 14}) {
        double mass = kraft_mass(n);
        CHECK(mass <= 1.0);
        CHECK(mass >= prev);
        prev = mass;
    }
    CHECK(kraft_mass(4) == doctest::Approx(1.0 / 16));
}

TEST_CASE("early stop halts the stream") {
    int visited = 0;
    enumerate_programs(20, [&](const Program&) { return ++visited < 10; });
    CHECK(visited == 10);
}

TEST_CASE("max_bits below the shortest program yields nothing") {
    CHECK(count_programs(3) == 0);
    CHECK(count_programs(0) == 0);
}
