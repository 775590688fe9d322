#include "harmonica/catalog.hpp"
#include "harmonica/harmonic.hpp"
#include "harmonica/shift_forms.hpp"

// The m-parameterized families: each evaluator descends m -> m-1 to the
// stated m = 1 initial condition (see shift_forms.hpp). Duplicate *app
// labels resolve to these entries as aliases.

namespace harmonica {

void register_recursive_m_entries(std::vector<FormulaEntry>& out) {
    EntryBuilder("lemSumj1sqjm", Family::RecursiveInM)
        .alias("lemSumj1sqjmapp")
        .summand("1/((j+1)^2(j+m))")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 1, 1, a.m); })
        .form([](const auto& c, const EvalArgs& a) { return rational_jm(c, a.n, a.m); })
        .limit_fn([](const EvalArgs& a) {
            if (a.m == 1) return LimitExpr().zeta3(1).one(-1);
            Rational d(a.m - 1);
            Rational ones = -1 / d - harmonic(a.m, 1) / (d * d) + 1 / (d * d);
            return LimitExpr().one_r(ones).pi2_r(Rational(1, 6) / d);
        })
        .gap(2, 1, 2, 0)
        .done(out);

    EntryBuilder("lemSumHj1jm", Family::RecursiveInM)
        .alias("lemSumHj1jmapp")
        .summand("H_{j,1}/(j+m)")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, a.m, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) { return h1_over_jm(c, a.n, a.m); })
        .divergent("1/2 ln^2 n")
        .done(out);

    EntryBuilder("lemSumHj2jm", Family::RecursiveInM)
        .alias("lemSumHj2jmapp")
        .summand("H_{j,2}/(j+m)")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, a.m, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) { return h2_over_jm(c, a.n, a.m); })
        .divergent("(pi^2/6) ln n")
        .done(out);

    EntryBuilder("lemSumHj1sqjm", Family::RecursiveInM)
        .alias("lemSumHj1sqjmapp")
        .summand("H_{j,1}^2/(j+m)")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, a.m, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) { return h1sq_over_jm(c, a.n, a.m); })
        .divergent("1/3 ln^3 n")
        .done(out);

    EntryBuilder("lemSumHj1sqjmsq", Family::RecursiveInM)
        .alias("lemSumHj1sqjmsqapp")
        .summand("H_{j,1}^2/(j+m)^2")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, a.m, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) { return h1sq_over_jm_sq(c, a.n, a.m); })
        .limit_unstated() // convergent for every m; the source states m = 1 only
        .done(out);

    EntryBuilder("lemSumHi2sqim", Family::RecursiveInM)
        .alias("lemSumHi2sqimapp")
        .summand("H_{j,2}^2/(j+m)")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, a.m, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) { return h2sq_over_jm(c, a.n, a.m); })
        .divergent("ln n")
        .done(out);

    // H_{j,2}^2 over a squared shift, also recursive in m
    EntryBuilder("lemSumHi2sqipmsq", Family::RecursiveInM)
        .summand("H_{j,2}^2/(j+m)^2")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, a.m, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) { return h2sq_over_jm_sq(c, a.n, a.m); })
        .limit_unstated()
        .done(out);
}

} // namespace harmonica
