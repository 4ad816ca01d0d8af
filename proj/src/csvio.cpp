#include "taskdiff/csvio.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace taskdiff {

const char* const kCsvHeader =
    "task,epsilon,delta,r_star,phase,policy_bits,L,log_steps,log_bids,effort_total,verified,"
    "seed,wall_ms";

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v); // shortest round-trip form
    return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& s) {
    if (s == "inf") return kInfinity;
    if (s == "-inf") return -kInfinity;
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("bad numeric field: " + s);
    return v;
}

int64_t parse_int(const std::string& s) {
    int64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("bad integer field: " + s);
    return v;
}

uint64_t parse_uint(const std::string& s) {
    uint64_t v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ParseError("bad unsigned field: " + s);
    return v;
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << kCsvHeader << "\n";
    for (const ResultRow& r : rows) {
        os << r.task << ',' << format_double(r.epsilon) << ',' << format_double(r.delta) << ','
           << format_double(r.r_star) << ',';
        if (r.phase) os << *r.phase;
        os << ',' << r.policy_bits << ',';
        if (r.length_bits) os << *r.length_bits;
        os << ',';
        if (r.log_steps) os << format_double(*r.log_steps);
        os << ',';
        if (r.log_bids) os << format_double(*r.log_bids);
        os << ',';
        if (r.effort_total) os << format_double(*r.effort_total);
        os << ',' << (r.verified ? 1 : 0) << ',' << r.seed << ',' << r.wall_ms << "\n";
    }
    return os.str();
}

std::vector<ResultRow> rows_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw ParseError("missing or unexpected CSV header");
    std::vector<ResultRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_line(line);
        if (f.size() != 13) throw ParseError("wrong field count in row: " + line);
        ResultRow r;
        r.task = f[0];
        r.epsilon = parse_double(f[1]);
        r.delta = parse_double(f[2]);
        r.r_star = parse_double(f[3]);
        if (!f[4].empty()) r.phase = parse_int(f[4]);
        r.policy_bits = f[5];
        if (!f[6].empty()) r.length_bits = parse_int(f[6]);
        if (!f[7].empty()) r.log_steps = parse_double(f[7]);
        if (!f[8].empty()) r.log_bids = parse_double(f[8]);
        if (!f[9].empty()) r.effort_total = parse_double(f[9]);
        r.verified = parse_int(f[10]) != 0;
        r.seed = parse_uint(f[11]);
        r.wall_ms = parse_int(f[12]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void store_rows(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << rows_to_csv(rows);
    if (!out) throw IoError("write failed: " + path);
}

std::vector<ResultRow> load_rows(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return rows_from_csv(buf.str());
}

} // namespace taskdiff
