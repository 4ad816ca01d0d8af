#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "taskdiff/program.hpp"

namespace taskdiff {

// Streams every valid program of length <= max_bits exactly once, ordered by
// (length_bits, lexicographic bits). The visitor returns false to stop early.
void enumerate_programs(int64_t max_bits, const std::function<bool(const Program&)>& visit);

std::vector<Program> enumerate_all(int64_t max_bits);

int64_t count_programs(int64_t max_bits);

// Kraft sum over all valid programs of length <= max_bits: sum of 2^-L.
double kraft_mass(int64_t max_bits);

} // namespace taskdiff
