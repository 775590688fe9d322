#pragma once

// Randomized invariant checks shared by the unit tests and the acceptance
// suite. Each function returns the number of cases it ran and throws
// std::runtime_error (with the offending parameters) on the first exact
// mismatch.

#include "harmonica/catalog.hpp"
#include "harmonica/recursion.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace harmonica_properties {

using namespace harmonica;

inline void fail(const std::string& what, const SumSpec& spec) {
    throw std::runtime_error(what + " violated for " + spec.describe());
}

// direct_eval(n) == direct_eval(n-1) + summand(n) for every kind, including
// extended factor and shift fields
inline int additivity_cases(const HarmonicTable& table, std::mt19937& rng, int cases) {
    std::uniform_int_distribution<int> kind(0, 4), expo(0, 3), order(1, 3), hshift(0, 2);
    std::uniform_int_distribution<std::int64_t> nd(1, table.n_max() - 3), shift(0, 3);
    int done = 0;
    for (; done < cases; ++done) {
        SumSpec spec;
        switch (kind(rng)) {
            case 0: spec = g_spec(nd(rng), expo(rng), expo(rng), shift(rng), shift(rng), order(rng)); break;
            case 1: spec = v_spec(nd(rng), expo(rng), expo(rng), shift(rng), shift(rng), order(rng)); break;
            case 2: spec = r2_spec(nd(rng), expo(rng), expo(rng), shift(rng), shift(rng)); break;
            case 3:
                spec = r3_spec(nd(rng), expo(rng), expo(rng), expo(rng), shift(rng), shift(rng),
                               shift(rng));
                spec.y = expo(rng) % 2;
                spec.x = shift(rng);
                break;
            default: spec = mixed_spec(nd(rng), hshift(rng)); break;
        }
        if ((spec.kind == SumKind::G || spec.kind == SumKind::V) && kind(rng) == 0)
            spec.shift = hshift(rng) % 2;
        SumSpec prev = spec;
        prev.n = spec.n - 1;
        if (direct_eval(spec, table) !=
            direct_eval(prev, table) + summand(spec, spec.n, table))
            fail("additivity", spec);
    }
    return done;
}

// G/V/R2 are symmetric under swapping the two shift factors
inline int shift_symmetry_cases(const HarmonicTable& table, std::mt19937& rng, int cases) {
    std::uniform_int_distribution<int> expo(0, 3), order(1, 2), which(0, 2);
    std::uniform_int_distribution<std::int64_t> nd(0, table.n_max() / 2), shift(0, 4);
    int done = 0;
    for (; done < cases; ++done) {
        int p = expo(rng), q = expo(rng), m = order(rng);
        std::int64_t n = nd(rng), r = shift(rng), s = shift(rng);
        SumSpec a, b;
        switch (which(rng)) {
            case 0:
                a = g_spec(n, p, q, r, s, m);
                b = g_spec(n, q, p, s, r, m);
                break;
            case 1:
                a = v_spec(n, p, q, r, s, m);
                b = v_spec(n, q, p, s, r, m);
                break;
            default:
                a = r2_spec(n, p, q, r, s);
                b = r2_spec(n, q, p, s, r);
                break;
        }
        if (direct_eval(a, table) != direct_eval(b, table)) fail("shift symmetry", a);
    }
    return done;
}

// H_{j,m} - H_{j-1,m} == j^-m and tail_sum == harmonic difference
inline int telescoping_cases(const HarmonicTable& table, std::mt19937& rng, int cases) {
    std::uniform_int_distribution<std::int64_t> jd(1, table.n_max()), ad(1, 6), bd(-2, 8);
    std::uniform_int_distribution<int> md(1, table.m_max());
    int done = 0;
    for (; done < cases; ++done) {
        std::int64_t j = jd(rng);
        int m = md(rng);
        if (table.at(j, m) - table.at(j - 1, m) != inv_pow(j, m))
            throw std::runtime_error("telescoping violated at j=" + std::to_string(j) +
                                     ", m=" + std::to_string(m));
        std::int64_t n = jd(rng) / 2, a = ad(rng), b = a + bd(rng);
        Rational lhs = tail_sum(n, a, b, m);
        Rational rhs = b < a ? Rational(0) : harmonic(n + b, m) - harmonic(n + a - 1, m);
        if (lhs != rhs)
            throw std::runtime_error("tail telescoping violated at n=" + std::to_string(n));
    }
    return done;
}

struct TheoremCellSample {
    SumSpec spec;
    BasePolicy policy;
};

inline TheoremCellSample sample_theorem_cell(const HarmonicTable& table, std::mt19937& rng) {
    std::uniform_int_distribution<int> expo(0, 4), order(1, 2), coin(0, 1);
    std::uniform_int_distribution<std::int64_t> nd(0, std::min<std::int64_t>(40, table.n_max() - 8)),
        shift(0, 3);
    for (;;) {
        int p = expo(rng), q = expo(rng);
        if (p + q < 2 || p + q > 4) continue;
        SumSpec spec = coin(rng) ? g_spec(nd(rng), p, q, shift(rng), shift(rng), order(rng))
                                 : v_spec(nd(rng), p, q, shift(rng), shift(rng), order(rng));
        BasePolicy policy = coin(rng) ? BasePolicy::CatalogFirst : BasePolicy::OracleOnly;
        return {spec, policy};
    }
}

// replaying a reduction trace bottom-up reproduces the returned value, and
// every leaf is a base
inline int trace_replay_cases(const HarmonicTable& table, std::mt19937& rng, int cases) {
    int done = 0;
    for (; done < cases; ++done) {
        auto [spec, policy] = sample_theorem_cell(table, rng);
        auto eval = spec.kind == SumKind::G ? eval_G : eval_V;
        auto [value, trace] = eval(spec, table, policy);
        if (trace.replay() != value) fail("trace replay", spec);
        for (const auto& node : trace.nodes)
            if (node.children.empty() && node.rule != ReductionRule::BaseCatalog &&
                node.rule != ReductionRule::BaseOracle)
                fail("leaf rule", node.spec);
    }
    return done;
}

// CatalogFirst and OracleOnly agree exactly (and match the oracle)
inline int base_policy_cases(const HarmonicTable& table, std::mt19937& rng, int cases) {
    int done = 0;
    for (; done < cases; ++done) {
        auto [spec, policy] = sample_theorem_cell(table, rng);
        (void)policy;
        auto eval = spec.kind == SumKind::G ? eval_G : eval_V;
        Rational via_catalog = eval(spec, table, BasePolicy::CatalogFirst).first;
        Rational via_oracle = eval(spec, table, BasePolicy::OracleOnly).first;
        if (via_catalog != via_oracle) fail("base policy independence", spec);
        if (via_catalog != direct_eval(spec, table)) fail("theorem-oracle equivalence", spec);
    }
    return done;
}

struct PropertyRunTotals {
    int additivity = 0;
    int shift_symmetry = 0;
    int telescoping = 0;
    int trace_replay = 0;
    int base_policy = 0;
    int total() const {
        return additivity + shift_symmetry + telescoping + trace_replay + base_policy;
    }
};

// The full randomized battery; >= 10^4 cases overall.
inline PropertyRunTotals run_property_battery(unsigned seed) {
    HarmonicTable table(120, 6);
    std::mt19937 rng(seed);
    PropertyRunTotals totals;
    totals.additivity = additivity_cases(table, rng, 3000);
    totals.shift_symmetry = shift_symmetry_cases(table, rng, 2500);
    totals.telescoping = telescoping_cases(table, rng, 2500);
    totals.trace_replay = trace_replay_cases(table, rng, 1200);
    totals.base_policy = base_policy_cases(table, rng, 1300);
    return totals;
}

} // namespace harmonica_properties
