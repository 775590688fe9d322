#pragma once

#include "harmonica/catalog.hpp"
#include "harmonica/limit_expr.hpp"
#include "harmonica/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace harmonica {

// Rational enclosure of a basis constant: |constant - value| < 2^-(bits+8).
// pi comes from a fixed-point Machin evaluation (16 atan(1/5) - 4 atan(1/239)),
// zeta(3) and zeta(5) from Borwein's alternating-series acceleration; powers
// and products are formed with guard bits. Memoized per (constant, bits)
// behind a mutex; evaluation afterwards is pure.
Rational basis_value(BasisConstant b, int precision_bits);

// sum of coeff * basis over the expression, to the requested precision.
Rational eval_limit(const LimitExpr& expr, int precision_bits);

// decimal string of eval_limit with `digits` fractional digits
std::string eval_limit_decimal(const LimitExpr& expr, int precision_bits, int digits);

int default_precision_bits(); // 256, or HARMONICA_PRECISION_BITS when set

struct ConvergencePoint {
    std::int64_t n;
    Rational gap; // |closed_form(n) - limit|
};

struct ConvergenceReport {
    std::string id;
    int m = 0; // parameter, when the entry takes one
    LimitExpr limit;
    std::vector<ConvergencePoint> points; // geometric schedule, last point at N
    Rational bound;                       // declared gap bound at N
    int precision_bits = 0;
    bool monotone = true; // gaps nonincreasing along the schedule
    bool pass = false;    // final gap <= bound
};

// Evaluates the closed form along n = 2, 4, 8, ..., N and compares against
// the entry's exact limit. Throws domain_error for divergent/unstated
// entries or when the entry declares no gap bound. A caller evaluating many
// entries should pass one shared table (sized >= N + m + 8) to avoid
// rebuilding it per entry.
ConvergenceReport check_convergence(const std::string& id, std::int64_t n_points_up_to,
                                    int precision_bits, const EvalArgs& params = {},
                                    const HarmonicTable* shared_table = nullptr);

// One row of the known-limit table: an infinite sum from the literature,
// its oracle truncation at N, and the declared bound C ln^2(N)/N.
struct KnownLimitRow {
    std::string name;
    LimitExpr limit;
    Rational truncated; // fixed-point truncation at N (error << the bound)
    Rational gap;
    Rational bound;
    Rational c; // frozen per-row constant
    bool pass = false;
};

// The five series with known limits, truncated at N.
std::vector<KnownLimitRow> known_limit_table(std::int64_t big_n, int precision_bits);

// The same five truncations summed exactly; used to validate the
// fixed-point path at small N.
Rational known_sum_exact(int row, std::int64_t n, const HarmonicTable& table);
Rational known_sum_fixed(int row, std::int64_t n, int precision_bits);

// gap bound C ln^b(N) / N^a as a rational (ln N rounded up)
Rational gap_bound_value(const GapBound& g, std::int64_t n);

} // namespace harmonica
