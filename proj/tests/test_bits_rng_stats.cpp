#include <doctest.h>

#include <cmath>

#include "taskdiff/bits.hpp"
#include "taskdiff/rng.hpp"
#include "taskdiff/stats.hpp"

using namespace taskdiff;

TEST_CASE("bitstring append/read round trip") {
    BitString b;
    b.append_bits(0b1011, 4);
    b.append_bits(0b01, 2);
    b.append_bits(0b11001100, 8);
    CHECK(b.size() == 14);
    CHECK(b.read_bits(0, 4) == 0b1011);
    CHECK(b.read_bits(4, 2) == 0b01);
    CHECK(b.read_bits(6, 8) == 0b11001100);
    CHECK(b.to_string() == "10110111001100");
}

TEST_CASE("byte padding preserves arbitrary bit lengths") {
    for (const char* s : {"", "1", "0", "10110", "1111111", "10110111", "101101110"}) {
        BitString b = BitString::from_string(s);
        BitString back = BitString::from_padded_bytes(b.to_padded_bytes());
        CHECK(back == b);
        CHECK(BitString::from_hex(b.to_hex()) == b);
    }
}

TEST_CASE("length-lex order compares length first") {
    BitString a = BitString::from_string("111");
    BitString b = BitString::from_string("0000");
    CHECK(a.length_lex_less(b));
    CHECK(!b.length_lex_less(a));
    CHECK(BitString::from_string("0100").length_lex_less(BitString::from_string("0101")));
}

TEST_CASE("prefix detection") {
    CHECK(BitString::from_string("10").is_prefix_of(BitString::from_string("1011")));
    CHECK(!BitString::from_string("11").is_prefix_of(BitString::from_string("1011")));
}

TEST_CASE("rng streams are deterministic and tag-separated") {
    RngStream a(derive(7, StreamTag::task, 3));
    RngStream b(derive(7, StreamTag::task, 3));
    RngStream c(derive(7, StreamTag::agent, 3));
    bool any_diff = false;
    for (int i = 0; i < 16; ++i) {
        uint64_t x = a.next_u64();
        CHECK(x == b.next_u64());
        if (x != c.next_u64()) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("rng uniform helpers stay in range") {
    RngStream r(123);
    for (int i = 0; i < 1000; ++i) {
        double d = r.next_double();
        CHECK(d >= 0.0);
        CHECK(d < 1.0);
        int64_t v = r.next_range(3, 9);
        CHECK(v >= 3);
        CHECK(v <= 9);
        double u = r.next_uniform(0.2, 1.0);
        CHECK(u >= 0.2);
        CHECK(u <= 1.0);
    }
}

TEST_CASE("running stats match closed forms") {
    RunningStats s;
    for (double x : {0.0, 1.0, 1.0, 0.5}) s.add(x);
    CHECK(s.count() == 4);
    CHECK(s.mean() == doctest::Approx(0.625));
    CHECK(s.variance_unbiased() == doctest::Approx(0.2291666667));
    CHECK(s.variance_population() == doctest::Approx(0.171875));
}

TEST_CASE("smoothed estimators include the fabricated {0,1} pair") {
    RunningStats s;
    s.add(1.0);
    // samples {0, 1, 1}: mean 2/3, population variance 2/9
    CHECK(s.smoothed_mean() == doctest::Approx(2.0 / 3.0));
    CHECK(s.smoothed_variance() == doctest::Approx(2.0 / 9.0));
    // bounded by 1/4 for [0,1] responses
    RunningStats t;
    for (int i = 0; i < 50; ++i) t.add(i % 2 ? 1.0 : 0.0);
    CHECK(t.smoothed_variance() <= 0.25 + 1e-12);
}

TEST_CASE("normal quantile against table values") {
    CHECK(z_quantile(0.05) == doctest::Approx(1.9599640).epsilon(1e-6));
    CHECK(z_quantile(0.32) == doctest::Approx(0.9944579).epsilon(1e-6));
    CHECK(z_quantile(0.01) == doctest::Approx(2.5758293).epsilon(1e-6));
    CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
    CHECK(normal_quantile(0.975) == doctest::Approx(1.9599640).epsilon(1e-6));
    CHECK(normal_quantile(1e-9) == doctest::Approx(-5.9978070).epsilon(1e-5));
    CHECK_THROWS_AS(z_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(z_quantile(1.0), std::domain_error);
}

TEST_CASE("z quantile shrinks toward zero as delta grows") {
    double prev = kInfinity;
    for (double d : {0.01, 0.05, 0.2, 0.5, 0.9, 0.999}) {
        double z = z_quantile(d);
        CHECK(z < prev);
        CHECK(z >= 0.0);
        prev = z;
    }
}
