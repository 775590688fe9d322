#include "harmonica/limits.hpp"

#include "harmonica/errors.hpp"
#include "harmonica/oracle.hpp"

#include <cmath>
#include <optional>
#include <cstdlib>
#include <map>
#include <mutex>

namespace harmonica {

namespace {

// ---- fixed-point pi (Machin) ----

// floor(atan(1/x) * 2^prec) up to a few ulps: term-by-term with floor
// divisions, each term contributing at most one ulp of error.
Int atan_inv_scaled(const Int& one, std::int64_t x) {
    Int term = one / x;
    Int sum = term;
    Int xx = Int(x) * x;
    for (int k = 1;; ++k) {
        term /= xx;
        if (term == 0) break;
        Int t = term / (2 * k + 1);
        if (k % 2 == 1)
            sum -= t;
        else
            sum += t;
    }
    return sum;
}

// |pi - result| < 2^-(prec-12): the series error is below one ulp per term
// and roughly prec/4 terms enter with weights 16 and 4.
Rational pi_enclosure(int prec) {
    Int one = Int(1) << prec;
    Int scaled = 16 * atan_inv_scaled(one, 5) - 4 * atan_inv_scaled(one, 239);
    return Rational(scaled, one);
}

// ---- zeta via Borwein's alternating-series acceleration ----

// |zeta(s) - result| <= 3 / ((3 + sqrt(8))^terms * (1 - 2^(1-s)))
Rational zeta_enclosure(int s, int terms) {
    // d_k = terms * sum_{i<=k} (terms+i-1)! 4^i / ((terms-i)! (2i)!)
    std::vector<Rational> d(static_cast<std::size_t>(terms) + 1);
    Rational t(1, terms); // t_0 = (terms-1)!/terms!
    Rational acc = t;
    d[0] = acc * terms;
    for (int i = 1; i <= terms; ++i) {
        t *= Rational(4 * (terms + i - 1) * (terms - i + 1), 2 * i * (2 * i - 1));
        acc += t;
        d[static_cast<std::size_t>(i)] = acc * terms;
    }
    Rational sum = 0;
    for (int k = 0; k < terms; ++k) {
        Rational term = (d[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(terms)]) /
                        Rational(ipow(Int(k + 1), s));
        if (k % 2 == 1)
            sum -= term;
        else
            sum += term;
    }
    Rational eta_factor = Rational(1) - Rational(1, Int(1) << (s - 1));
    return -sum / (d[static_cast<std::size_t>(terms)] * eta_factor);
}

int zeta_terms_for(int bits) {
    // (3 + sqrt(8))^terms >= 2^bits * safety
    return static_cast<int>(static_cast<double>(bits) * 0.3934) + 8;
}

Rational compute_basis(BasisConstant b, int bits) {
    const int guard = 40;
    switch (b) {
        case BasisConstant::One:
            return Rational(1);
        case BasisConstant::Pi2: {
            Rational pi = pi_enclosure(bits + guard);
            return pi * pi;
        }
        case BasisConstant::Pi4: {
            Rational pi = pi_enclosure(bits + guard);
            Rational p2 = pi * pi;
            return p2 * p2;
        }
        case BasisConstant::Pi6: {
            Rational pi = pi_enclosure(bits + guard);
            Rational p2 = pi * pi;
            return p2 * p2 * p2;
        }
        case BasisConstant::Zeta3:
            return zeta_enclosure(3, zeta_terms_for(bits + guard));
        case BasisConstant::Zeta5:
            return zeta_enclosure(5, zeta_terms_for(bits + guard));
        case BasisConstant::Zeta3Sq: {
            Rational z = zeta_enclosure(3, zeta_terms_for(bits + guard));
            return z * z;
        }
        case BasisConstant::Pi2Zeta3: {
            Rational pi = pi_enclosure(bits + guard);
            return pi * pi * zeta_enclosure(3, zeta_terms_for(bits + guard));
        }
    }
    throw std::logic_error("bad basis constant");
}

// truncate a rational enclosure to a manageable denominator 2^(bits+16)
Rational snap(const Rational& v, int bits) {
    Int scale = Int(1) << (bits + 16);
    Int scaled = (num(v) * scale) / den(v);
    return Rational(scaled, scale);
}

std::mutex g_basis_mutex;
std::map<std::pair<int, int>, Rational> g_basis_cache;

} // namespace

Rational basis_value(BasisConstant b, int precision_bits) {
    if (precision_bits < 64) throw domain_error("precision_bits must be >= 64");
    auto key = std::make_pair(static_cast<int>(b), precision_bits);
    std::lock_guard<std::mutex> lock(g_basis_mutex);
    auto it = g_basis_cache.find(key);
    if (it != g_basis_cache.end()) return it->second;
    Rational v = snap(compute_basis(b, precision_bits), precision_bits);
    g_basis_cache.emplace(key, v);
    return v;
}

Rational eval_limit(const LimitExpr& expr, int precision_bits) {
    Rational acc = 0;
    for (const auto& [b, c] : expr.coefficients()) acc += c * basis_value(b, precision_bits);
    return acc;
}

std::string eval_limit_decimal(const LimitExpr& expr, int precision_bits, int digits) {
    return to_decimal_string(eval_limit(expr, precision_bits), digits);
}

int default_precision_bits() {
    if (const char* env = std::getenv("HARMONICA_PRECISION_BITS")) {
        int bits = std::atoi(env);
        if (bits >= 64) return bits;
    }
    return 256;
}

Rational gap_bound_value(const GapBound& g, std::int64_t n) {
    // rational upper bound on ln n
    double ln = std::log(static_cast<double>(n));
    Rational ln_up(static_cast<long long>(std::ceil(ln * 1048576.0)) + 1, 1048576);
    Rational acc = g.c;
    for (int i = 0; i < g.log_pow; ++i) acc *= ln_up;
    return acc / Rational(ipow(Int(n), g.n_pow));
}

ConvergenceReport check_convergence(const std::string& id, std::int64_t big_n,
                                    int precision_bits, const EvalArgs& params,
                                    const HarmonicTable* shared_table) {
    const FormulaEntry& entry = Catalog::instance().entry(id);
    if (!entry.convergent())
        throw domain_error("check_convergence: " + id + " has no stated finite limit");
    if (!entry.gap) throw domain_error("check_convergence: " + id + " declares no gap bound");

    ConvergenceReport report;
    report.id = entry.id;
    report.m = params.m;
    report.precision_bits = precision_bits;
    EvalArgs args = params;
    report.limit = entry.limit_for(args);
    Rational limit_value = eval_limit(report.limit, precision_bits);

    std::vector<std::int64_t> schedule;
    for (std::int64_t n = 2; n < big_n; n *= 2) schedule.push_back(n);
    schedule.push_back(big_n);

    std::optional<HarmonicTable> own_table;
    if (!shared_table)
        own_table.emplace(big_n + std::max<std::int64_t>(8, params.m) + 2);
    const HarmonicTable& table = shared_table ? *shared_table : *own_table;
    ExactCtx ctx{table};
    Rational prev_gap;
    bool have_prev = false;
    for (std::int64_t n : schedule) {
        args.n = n;
        Rational value = entry.exact(ctx, args);
        Rational gap = abs(value - limit_value);
        if (have_prev && gap > prev_gap) report.monotone = false;
        prev_gap = gap;
        have_prev = true;
        report.points.push_back(ConvergencePoint{n, gap});
    }
    report.bound = gap_bound_value(*entry.gap, big_n);
    report.pass = report.points.back().gap <= report.bound;
    return report;
}

namespace {

// the five literature series: coefficient tables for the fixed-point and
// exact truncation paths
struct KnownSeries {
    const char* name;
    int h_order;   // order of the harmonic factor
    bool squared;  // H^2 instead of H
    int denom_pow; // power of j in the denominator
    LimitExpr limit;
    long long c_num, c_den; // frozen gap-bound constant
};

std::vector<KnownSeries> known_series() {
    return {
        {"sum H_{j,1}/j^2", 1, false, 2, LimitExpr().zeta3(2), 2, 1},
        {"sum H_{j,1}/j^3", 1, false, 3, LimitExpr().pi4(1, 72), 1, 1},
        {"sum H_{j,1}/j^4", 1, false, 4, LimitExpr().zeta5(3).pi2zeta3(-1, 6), 1, 1},
        {"sum H_{j,1}^2/j^2", 1, true, 2, LimitExpr().pi4(17, 360), 3, 1},
        {"sum H_{j,2}/j^4", 2, false, 4, LimitExpr().zeta3sq(1).pi6(-1, 2835), 1, 1},
    };
}

} // namespace

Rational known_sum_exact(int row, std::int64_t n, const HarmonicTable& table) {
    KnownSeries s = known_series().at(static_cast<std::size_t>(row));
    OpenSumKind kind = s.h_order == 2 ? OpenSumKind::H2
                                      : (s.squared ? OpenSumKind::H1Sq : OpenSumKind::H1);
    return open_sum(kind, s.denom_pow, n, table);
}

Rational known_sum_fixed(int row, std::int64_t n, int precision_bits) {
    KnownSeries s = known_series().at(static_cast<std::size_t>(row));
    // scaled integer accumulation: one ulp of floor error per operation,
    // 2n operations total, far below the comparison tolerances
    Int one = Int(1) << precision_bits;
    Int h = 0;   // H_{j,order} scaled
    Int acc = 0; // partial sum scaled
    for (std::int64_t j = 1; j <= n; ++j) {
        h += one / ipow(Int(j), s.h_order);
        Int numer = s.squared ? (h * h) >> precision_bits : h;
        acc += numer / ipow(Int(j), s.denom_pow);
    }
    return Rational(acc, one);
}

std::vector<KnownLimitRow> known_limit_table(std::int64_t big_n, int precision_bits) {
    std::vector<KnownLimitRow> rows;
    auto series = known_series();
    for (std::size_t i = 0; i < series.size(); ++i) {
        const KnownSeries& s = series[i];
        KnownLimitRow row;
        row.name = s.name;
        row.limit = s.limit;
        row.c = Rational(s.c_num, s.c_den);
        row.truncated = known_sum_fixed(static_cast<int>(i), big_n, precision_bits);
        row.gap = abs(eval_limit(s.limit, precision_bits) - row.truncated);
        row.bound = gap_bound_value(GapBound{row.c, 1, 2}, big_n);
        row.pass = row.gap <= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace harmonica
