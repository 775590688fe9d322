#pragma once

#include "harmonica/catalog.hpp"
#include "harmonica/f64table.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace harmonica {

// Wall-clock comparison of the three evaluation routes per formula, in
// double precision (exact arithmetic is not meaningful to time at n = 10^6:
// the numbers themselves grow with n). Correctness is owned by `verify`;
// the routes are loosely cross-checked here.
struct BenchRow {
    std::string id;
    std::int64_t n;
    double direct_seconds;     // literal O(n) summation
    double closed_seconds;     // closed form over the prefix tables
    double recursion_seconds;  // theorem reduction, oracle bases (G/V only)
    bool has_recursion = false;
    double rel_disagreement;   // max relative difference between routes
};

struct BenchReport {
    std::vector<std::int64_t> sizes;
    int repetitions = 5;
    double table_build_seconds; // paid once, amortized across all entries
    std::int64_t table_n = 0;
    std::vector<BenchRow> rows;
};

BenchReport run_bench(const std::vector<std::int64_t>& sizes, int repetitions,
                      std::optional<Family> family = std::nullopt);

} // namespace harmonica
