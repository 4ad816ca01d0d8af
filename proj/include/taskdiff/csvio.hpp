#pragma once

#include <optional>
#include <string>
#include <vector>

#include "taskdiff/config.hpp"

namespace taskdiff {

// One experiment result. Exhausted/undefined outcomes keep their row with
// the policy and numeric fields left empty and verified = 0.
struct ResultRow {
    std::string task;
    double epsilon = 0.0;
    double delta = 0.05;
    double r_star = 1.0;
    std::optional<int64_t> phase;
    std::string policy_bits; // hex with the 1-then-zeros pad, possibly empty
    std::optional<int64_t> length_bits;
    std::optional<double> log_steps;
    std::optional<double> log_bids;
    std::optional<double> effort_total;
    bool verified = false;
    uint64_t seed = 0;
    int64_t wall_ms = 0;

    bool flagged() const { return !effort_total.has_value(); }
};

// Fixed schema; see FORMATS.md.
extern const char* const kCsvHeader;

std::string format_double(double v);

std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> rows_from_csv(const std::string& text); // throws ParseError

void store_rows(const std::vector<ResultRow>& rows, const std::string& path); // throws IoError
std::vector<ResultRow> load_rows(const std::string& path);                    // throws IoError

} // namespace taskdiff
