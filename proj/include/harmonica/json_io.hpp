#pragma once

#include "harmonica/bench.hpp"
#include "harmonica/catalog.hpp"
#include "harmonica/limits.hpp"
#include "harmonica/recursion.hpp"
#include "harmonica/verify.hpp"

#include <json.hpp>

namespace harmonica {

// Exact values serialize as "num/den" strings; decimals carry an explicit
// precision field.

nlohmann::json limit_expr_to_json(const LimitExpr& e);
nlohmann::json entry_to_json(const FormulaEntry& e);           // registry index row
nlohmann::json registry_index_json();                          // all entries, id order
nlohmann::json trace_to_json(const ReductionTrace& t);
nlohmann::json verify_report_to_json(const VerifyReport& r);
nlohmann::json convergence_report_to_json(const ConvergenceReport& r, int decimal_digits);
nlohmann::json known_limit_table_json(const std::vector<KnownLimitRow>& rows,
                                      int precision_bits, int decimal_digits);
nlohmann::json bench_report_to_json(const BenchReport& r);

} // namespace harmonica
