#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "taskdiff/csvio.hpp"
#include "taskdiff/policies.hpp"
#include "taskdiff/runexp.hpp"
#include "taskdiff/svg.hpp"

using namespace taskdiff;

namespace {

const char* kMinimalConfig = R"({
  "command": "hardness",
  "task": {"name": "imitation", "params": {"alphabet": 2, "hold": 0, "enumerable_seeds": 16}},
  "epsilon": 0.25
})";

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("minimal config gets the documented defaults") {
    ExperimentConfig cfg = parse_config_text(kMinimalConfig);
    CHECK(cfg.command == "hardness");
    CHECK(cfg.task.name == "imitation");
    CHECK(cfg.difficulty.epsilon == 0.25);
    CHECK(cfg.difficulty.delta == 0.05);
    CHECK(cfg.difficulty.r_star == 1.0);
    CHECK(cfg.difficulty.n_confirm == 30);
    CHECK(cfg.difficulty.epsilon_grid == default_epsilon_grid());
    CHECK(cfg.protocol.episodes == 1);
    CHECK(!cfg.timings);
}

TEST_CASE("config validation rejects bad values with the right error types") {
    CHECK_THROWS_AS(parse_config_text("{nope"), ParseError);
    CHECK_THROWS_AS(parse_config_text(R"({"command": "hardness"})"), ParseError); // no task
    CHECK_THROWS_AS(parse_config_text(R"({"command": "hardness", "task": {"name": "coin"},
                                          "epsilonn": 0.1})"),
                    ParseError); // unknown field
    CHECK_THROWS_AS(parse_config_text(R"({"command": "hardness", "task": {"name": "coin"},
                                          "epsilon": 1.5})"),
                    RangeError);
    CHECK_THROWS_AS(parse_config_text(R"({"command": "dance", "task": {"name": "coin"}})"),
                    RangeError);
    CHECK_THROWS_AS(parse_config_text(R"({"command": "compose", "task": {"name": "coin"}})"),
                    RangeError); // compose needs task2
    CHECK_THROWS_AS(parse_config_text(R"({"command": "verify", "task": {"name": "coin"}})"),
                    RangeError); // verify needs a policy
    CHECK_THROWS_AS(parse_config_text(R"({"command": "hardness", "task": {"name": "coin"},
                                          "epsilon_grid": [0.2, 0.5]})"),
                    RangeError);
}

TEST_CASE("config round trip: parse of serialize of parse is identity") {
    ExperimentConfig cfg = parse_config_text(kMinimalConfig);
    std::string once = serialize_config(cfg);
    ExperimentConfig cfg2 = parse_config_text(once);
    std::string twice = serialize_config(cfg2);
    CHECK(once == twice);
}

TEST_CASE("missing config file raises IoError") {
    CHECK_THROWS_AS(parse_config_file("/nonexistent/nowhere.json"), IoError);
}

TEST_CASE("csv rows survive a lossless round trip") {
    RngStream rng(2024);
    std::vector<ResultRow> rows;
    for (int i = 0; i < 1000; ++i) {
        ResultRow r;
        r.task = i % 2 ? "imitation" : "mix(a|b)";
        r.epsilon = rng.next_double();
        r.delta = rng.next_uniform(0.001, 0.999);
        r.r_star = rng.next_uniform(0.5, 1.0);
        if (i % 3) r.phase = static_cast<int64_t>(rng.next_below(40));
        if (i % 5) {
            // random program bits, including lengths that are not byte-multiples
            BitString bits;
            int len = 1 + static_cast<int>(rng.next_below(37));
            for (int b = 0; b < len; ++b) bits.push_back(rng.next_bit());
            r.policy_bits = bits.to_hex();
            r.length_bits = len;
            r.log_steps = rng.next_uniform(0.0, 20.0);
            r.log_bids = rng.next_uniform(0.0, 12.0);
            r.effort_total = *r.log_steps + *r.log_bids + static_cast<double>(len);
        }
        r.verified = rng.next_bit();
        r.seed = rng.next_u64();
        r.wall_ms = static_cast<int64_t>(rng.next_below(10000));
        rows.push_back(r);
    }
    std::string csv = rows_to_csv(rows);
    std::vector<ResultRow> back = rows_from_csv(csv);
    REQUIRE(back.size() == rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].task == rows[i].task);
        CHECK(back[i].epsilon == rows[i].epsilon);
        CHECK(back[i].delta == rows[i].delta);
        CHECK(back[i].r_star == rows[i].r_star);
        CHECK(back[i].phase == rows[i].phase);
        CHECK(back[i].policy_bits == rows[i].policy_bits);
        CHECK(back[i].length_bits == rows[i].length_bits);
        CHECK(back[i].log_steps == rows[i].log_steps);
        CHECK(back[i].log_bids == rows[i].log_bids);
        CHECK(back[i].effort_total == rows[i].effort_total);
        CHECK(back[i].verified == rows[i].verified);
        CHECK(back[i].seed == rows[i].seed);
        CHECK(back[i].wall_ms == rows[i].wall_ms);
    }
    // unaligned program bits really did take the pad path
    bool any_unaligned = false;
    for (const ResultRow& r : rows)
        if (r.length_bits && *r.length_bits % 8 != 0) any_unaligned = true;
    CHECK(any_unaligned);
}

TEST_CASE("store and load: files and errors") {
    std::string path = temp_path("taskdiff_rows_test.csv");
    std::vector<ResultRow> rows(3);
    rows[0].task = "coin";
    rows[1].task = "maze";
    rows[2].task = "addition";
    store_rows(rows, path);
    std::vector<ResultRow> back = load_rows(path);
    REQUIRE(back.size() == 3);
    CHECK(back[1].task == "maze");
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_rows(path), IoError);
    CHECK_THROWS_AS(store_rows(rows, "/nonexistent/dir/file.csv"), IoError);
}

TEST_CASE("run_experiment: hardness row matches the library result byte-for-byte on rerun") {
    ExperimentConfig cfg = parse_config_text(kMinimalConfig);
    cfg.difficulty.k_max = 12;
    cfg.difficulty.n_seeds = 16;
    cfg.protocol.tau = 8;
    cfg.protocol.machine_speed = 4;
    ExperimentResult a = run_experiment(cfg);
    ExperimentResult b = run_experiment(cfg);
    CHECK(a.csv == b.csv);
    REQUIRE(a.rows.size() == 1);
    CHECK(!a.rows[0].flagged());
    CHECK(a.rows[0].policy_bits == policies::copy_once().to_hex());
    // the breakdown sums exactly
    REQUIRE(a.rows[0].effort_total.has_value());
    CHECK(*a.rows[0].effort_total ==
          doctest::Approx(static_cast<double>(*a.rows[0].length_bits) + *a.rows[0].log_steps +
                          *a.rows[0].log_bids)
              .epsilon(1e-12));
}

TEST_CASE("run_experiment: exhausted hardness comes back flagged, not thrown") {
    ExperimentConfig cfg;
    cfg.command = "hardness";
    cfg.task = {"coin", {{"p", 0.0}, {"enumerable_seeds", int64_t{8}}}};
    cfg.difficulty.epsilon = 0.5;
    cfg.difficulty.k_max = 8;
    cfg.difficulty.n_seeds = 8;
    cfg.protocol.tau = 1;
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.rows.size() == 1);
    CHECK(res.rows[0].flagged());
    CHECK(res.any_flagged);
    CHECK(res.rows[0].policy_bits.empty());
}

TEST_CASE("run_experiment: curve command emits per-instance rows and an SVG") {
    ExperimentConfig cfg;
    cfg.command = "curve";
    cfg.task = {"imitation",
                {{"alphabet", int64_t{2}}, {"hold", int64_t{0}}, {"enumerable_seeds", int64_t{16}}}};
    cfg.policy = "preset:copy";
    cfg.difficulty.epsilon = 0.1;
    cfg.difficulty.k_max = 12;
    cfg.difficulty.n_seeds = 16;
    cfg.protocol.tau = 8;
    cfg.protocol.machine_speed = 4;
    cfg.instances = 16;
    cfg.bins = 4.0;
    ExperimentResult res = run_experiment(cfg);
    CHECK(res.rows.size() == 16);
    for (const ResultRow& row : res.rows) CHECK(row.verified); // the copier covers everything
    CHECK(res.svg.find("<svg") != std::string::npos);
    CHECK(res.svg.find("polyline") != std::string::npos);

    // zero instances: header-only CSV
    cfg.instances = 0;
    ExperimentResult empty = run_experiment(cfg);
    CHECK(empty.rows.empty());
    CHECK(empty.csv == std::string(kCsvHeader) + "\n");
}

TEST_CASE("run_experiment: verify and search commands produce sane rows") {
    ExperimentConfig cfg;
    cfg.command = "verify";
    cfg.task = {"coin", {{"p", 1.0}}};
    cfg.policy = "preset:halt";
    cfg.difficulty.epsilon = 0.5;
    cfg.protocol.tau = 1;
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.rows.size() == 1);
    CHECK(res.rows[0].verified);

    ExperimentConfig s;
    s.command = "search";
    s.task = {"coin", {{"p", 1.0}, {"enumerable_seeds", int64_t{8}}}};
    s.difficulty.epsilon = 0.5;
    s.difficulty.k_max = 12;
    s.difficulty.n_confirm = 5;
    s.protocol.tau = 1;
    ExperimentResult rs = run_experiment(s);
    REQUIRE(rs.rows.size() == 1);
    CHECK(rs.rows[0].verified);
    CHECK(rs.rows[0].phase.has_value());
    CHECK(rs.summary.find("phase=1") != std::string::npos);
}

TEST_CASE("policy resolution: presets and hex round trips") {
    Program copy = resolve_policy("preset:copy");
    CHECK(copy == policies::copy_once());
    Program via_hex = resolve_policy("hex:" + copy.to_hex());
    CHECK(via_hex == copy);
    CHECK_THROWS(resolve_policy("preset:unheard_of"));
    CHECK_THROWS_AS(resolve_policy("garbage"), RangeError);
}

TEST_CASE("svg: renders points and axes deterministically") {
    std::vector<CurvePoint> pts = {{0.0, 1.0, 4}, {2.0, 0.5, 4}, {4.0, 0.0, 4}};
    std::string a = curve_svg(pts, "test");
    CHECK(a == curve_svg(pts, "test"));
    CHECK(a.find("circle") != std::string::npos);
    CHECK(a.find("acceptance rate") != std::string::npos);
    std::string empty = curve_svg({}, "none");
    CHECK(empty.find("<svg") != std::string::npos);
}

TEST_CASE("run_experiment: hardness row equals the difficulty module's answer") {
    ExperimentConfig cfg = parse_config_text(kMinimalConfig);
    cfg.difficulty.k_max = 12;
    cfg.difficulty.n_seeds = 16;
    cfg.protocol.tau = 8;
    cfg.protocol.machine_speed = 4;
    cfg.master_seed = 4;
    ExperimentResult res = run_experiment(cfg);
    DifficultyConfig dc = cfg.difficulty;
    dc.eval_seed = cfg.master_seed;
    auto direct = hardness(make_task(cfg.task), dc, cfg.protocol);
    REQUIRE(direct.has_value());
    REQUIRE(res.rows[0].effort_total.has_value());
    CHECK(*res.rows[0].effort_total == direct->bits);
    CHECK(res.rows[0].policy_bits == direct->witness.to_hex());
}

TEST_CASE("run_experiment: instance command rows carry witness ELS or a flag") {
    ExperimentConfig cfg;
    cfg.command = "instance";
    cfg.task = {"imitation",
                {{"alphabet", int64_t{2}}, {"hold", int64_t{0}}, {"enumerable_seeds", int64_t{16}}}};
    cfg.difficulty.epsilon = 0.1;
    cfg.difficulty.k_max = 12;
    cfg.difficulty.n_seeds = 16;
    cfg.protocol.tau = 8;
    cfg.protocol.machine_speed = 4;
    cfg.instances = 16;
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.rows.size() == 16);
    int cheap = 0, costly = 0;
    for (const ResultRow& row : res.rows) {
        REQUIRE(row.effort_total.has_value()); // the copier covers every instance
        if (*row.effort_total == doctest::Approx(4.0)) ++cheap;
        else ++costly;
    }
    CHECK(cheap > 0);
    CHECK(costly > 0);
    CHECK(!res.any_flagged);

    // undefined instances come back flagged
    ExperimentConfig und;
    und.command = "instance";
    und.task = {"coin", {{"p", 0.5}, {"enumerable_seeds", int64_t{16}}}};
    und.difficulty.epsilon = 0.1;
    und.difficulty.k_max = 8;
    und.difficulty.n_seeds = 16;
    und.protocol.tau = 1;
    und.instances = 16;
    ExperimentResult ru = run_experiment(und);
    CHECK(ru.any_flagged);
}

TEST_CASE("run_experiment: compose reports mixture and component hardness") {
    ExperimentConfig cfg;
    cfg.command = "compose";
    cfg.task = {"imitation",
                {{"alphabet", int64_t{2}}, {"hold", int64_t{0}}, {"enumerable_seeds", int64_t{16}}}};
    cfg.task2 = TaskSpec{"coin", {{"p", 1.0}, {"enumerable_seeds", int64_t{16}}}};
    cfg.alpha = 0.5;
    cfg.difficulty.epsilon = 0.1;
    cfg.difficulty.k_max = 12;
    cfg.difficulty.n_seeds = 16;
    cfg.protocol.tau = 8;
    cfg.protocol.machine_speed = 4;
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.rows.size() == 3);
    CHECK(res.rows[0].task == "mix(imitation|coin)");
    CHECK(res.summary.find("distance") != std::string::npos);
    CHECK(res.summary.find("covers") != std::string::npos);
}

TEST_CASE("csv loader rejects malformed rows") {
    CHECK_THROWS_AS(rows_from_csv("not,a,header\n"), ParseError);
    std::string good = std::string(kCsvHeader) + "\n";
    CHECK_THROWS_AS(rows_from_csv(good + "coin,0.1,0.05,1,,,,\n"), ParseError); // short row
    CHECK_THROWS_AS(rows_from_csv(good + "coin,zzz,0.05,1,,,,,,,0,0,0\n"), ParseError);
    CHECK(rows_from_csv(good).empty());
}
