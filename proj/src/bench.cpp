#include "harmonica/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace harmonica {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// literal double-precision summation of a spec
double direct_f64(const SumSpec& spec, const F64Table& t) {
    double acc = 0.0;
    for (std::int64_t j = 1; j <= spec.n; ++j) {
        double numer;
        switch (spec.kind) {
            case SumKind::G: numer = t.H(j + spec.shift, spec.m); break;
            case SumKind::V: {
                double h = t.H(j + spec.shift, spec.m);
                numer = h * h;
                break;
            }
            case SumKind::Mixed:
                numer = t.H(j + spec.shift, 1) * t.H(j + spec.shift, 2);
                break;
            default: numer = 1.0; break;
        }
        double denom = spec.kind == SumKind::Mixed ? static_cast<double>(j) : 1.0;
        if (spec.kind != SumKind::Mixed) {
            for (int e = 0; e < spec.p; ++e) denom *= static_cast<double>(j + spec.r);
            for (int e = 0; e < spec.q; ++e) denom *= static_cast<double>(j + spec.s);
            for (int e = 0; e < spec.w; ++e) denom *= static_cast<double>(j + spec.u);
            for (int e = 0; e < spec.y; ++e) denom *= static_cast<double>(j + spec.x);
        }
        acc += numer / denom;
    }
    return acc;
}

// double-precision mirror of the theorem reduction with oracle bases
double reduce_f64(const SumSpec& spec, const F64Table& t) {
    if (spec.kind == SumKind::R2 || spec.kind == SumKind::R3) return direct_f64(spec, t);
    if (spec.q > 0 && spec.r == spec.s) {
        SumSpec merged = spec;
        merged.p += merged.q;
        merged.q = 0;
        merged.s = 0;
        return reduce_f64(merged, t);
    }
    if (spec.p == 0 && spec.q > 0) {
        SumSpec swapped = spec;
        std::swap(swapped.p, swapped.q);
        std::swap(swapped.r, swapped.s);
        return reduce_f64(swapped, t);
    }
    if (spec.q == 0) {
        if (spec.r == 0) return direct_f64(spec, t);
        SumSpec head = spec;
        head.n += spec.r;
        head.r = 0;
        SumSpec cut = spec;
        cut.n = spec.r;
        cut.r = 0;
        double acc = reduce_f64(head, t) - reduce_f64(cut, t);
        if (spec.kind == SumKind::G) {
            for (std::int64_t i = 1; i <= spec.r; ++i)
                acc -= direct_f64(r2_spec(spec.n, spec.m, spec.p, i, spec.r), t);
        } else {
            for (std::int64_t i = 1; i <= spec.r; ++i)
                acc -= 2.0 * reduce_f64(g_spec(spec.n, spec.p, spec.m, spec.r, i, spec.m), t);
            for (std::int64_t i = 1; i <= spec.r; ++i)
                acc += direct_f64(r2_spec(spec.n, spec.p, 2 * spec.m, spec.r, i), t);
            for (std::int64_t i = 1; i <= spec.r; ++i)
                for (std::int64_t k = 1; k <= spec.r; ++k)
                    acc -= 2.0 *
                           direct_f64(r3_spec(spec.n, spec.p, spec.m, spec.m, spec.r, i, k), t);
            for (std::int64_t i1 = 1; i1 <= spec.r; ++i1)
                for (std::int64_t i2 = i1 + 1; i2 <= spec.r; ++i2)
                    acc += 2.0 *
                           direct_f64(r3_spec(spec.n, spec.p, spec.m, spec.m, spec.r, i1, i2), t);
        }
        return acc;
    }
    double acc = 0.0;
    if (spec.p >= spec.q) {
        double pref = std::pow(static_cast<double>(spec.s - spec.r), -spec.q);
        double binom = 1.0;
        for (int i = 0; i <= spec.q; ++i) {
            SumSpec term = spec;
            term.p = spec.p - i;
            term.q = i;
            acc += (i % 2 == 0 ? 1.0 : -1.0) * binom * pref * reduce_f64(term, t);
            binom = binom * (spec.q - i) / (i + 1);
        }
    } else {
        double pref = std::pow(static_cast<double>(spec.r - spec.s), -spec.p);
        double binom = 1.0;
        for (int i = 0; i <= spec.p; ++i) {
            SumSpec term = spec;
            term.p = i;
            term.q = spec.q - i;
            acc += (i % 2 == 0 ? 1.0 : -1.0) * binom * pref * reduce_f64(term, t);
            binom = binom * (spec.p - i) / (i + 1);
        }
    }
    return acc;
}

template <class F>
double time_median(F&& f, int reps, double& out_value) {
    std::vector<double> times;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clock_type::now();
        out_value = f();
        times.push_back(seconds_since(t0));
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

} // namespace

BenchReport run_bench(const std::vector<std::int64_t>& sizes, int repetitions,
                      std::optional<Family> family) {
    BenchReport report;
    report.sizes = sizes;
    report.repetitions = repetitions;
    std::int64_t n_max = 0;
    for (auto n : sizes) n_max = std::max(n_max, n);
    report.table_n = n_max + 16;

    auto t0 = clock_type::now();
    F64Table table(report.table_n);
    // touch the open-sum prefixes so their build cost lands here, not in a
    // formula's timing
    for (OpenSumKind k : {OpenSumKind::H1, OpenSumKind::H2, OpenSumKind::H1Sq, OpenSumKind::H2Sq})
        for (int p : {1, 2, 3, 4}) (void)table.open(k, p, 1);
    report.table_build_seconds = seconds_since(t0);

    F64Ctx ctx{table};
    for (const FormulaEntry* e : Catalog::instance().list(family)) {
        // parameterized entries are benched at a representative parameter
        EvalArgs args;
        if (e->params.kind == ParamDomain::Kind::M) args.m = std::max(2, e->params.m_min);
        if (e->params.kind == ParamDomain::Kind::MR) {
            args.m = 1;
            args.r = 3;
        }
        for (std::int64_t n : sizes) {
            args.n = n;
            BenchRow row;
            row.id = e->id;
            row.n = n;
            SumSpec spec = e->spec(args);
            double v_direct = 0, v_closed = 0, v_rec = 0;
            row.direct_seconds = time_median([&] { return direct_f64(spec, table); },
                                             repetitions, v_direct);
            row.closed_seconds = time_median([&] { return e->f64(ctx, args); }, repetitions,
                                             v_closed);
            row.has_recursion = (spec.kind == SumKind::G || spec.kind == SumKind::V) &&
                                !spec.outside_theorem_domain();
            if (row.has_recursion)
                row.recursion_seconds = time_median([&] { return reduce_f64(spec, table); },
                                                    repetitions, v_rec);
            else
                row.recursion_seconds = 0.0;
            double scale = std::max({std::abs(v_direct), 1.0});
            row.rel_disagreement = std::abs(v_closed - v_direct) / scale;
            if (row.has_recursion)
                row.rel_disagreement =
                    std::max(row.rel_disagreement, std::abs(v_rec - v_direct) / scale);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace harmonica
