#include "harmonica/catalog.hpp"
#include "harmonica/harmonic.hpp"

// Building blocks: sums of 1/((j+a)(j+b)...) with no harmonic factor in
// the numerator. Formulas transcribed from the published statements; where
// a statement disagreed with the end of its own derivation the final line
// is used and the entry carries an erratum note.

namespace harmonica {

void register_rational_entries(std::vector<FormulaEntry>& out) {
    // sum 1/((j+m)(j+r)), 0 <= m < r
    EntryBuilder("lemSumjmjr", Family::Rational)
        .summand("1/((j+m)(j+r)), 0 <= m < r")
        .param_mr(6)
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 1, a.m, a.r); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            std::int64_t m = a.m, r = a.r;
            return (c.H(r, 1) - c.H(m, 1) - (c.H(n + r, 1) - c.H(n + m, 1))) * c.q(1) /
                   c.q(r - m);
        })
        .limit_fn([](const EvalArgs& a) {
            Rational v = (harmonic(a.r, 1) - harmonic(a.m, 1)) / Rational(a.r - a.m);
            return LimitExpr().one_r(v);
        })
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSum0", Family::Rational)
        .summand("1/(j(j+1))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 1, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) { return c.q(1) - c.ip(a.n + 1, 1); })
        .limit(LimitExpr().one(1))
        .gap(1, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSum02", Family::Rational)
        .summand("1/(j(j+2))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 1, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(3, 4) - c.q(1, 2) * c.ip(n + 1, 1) - c.q(1, 2) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(3, 4))
        .gap(1, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSum1", Family::Rational)
        .summand("1/((j+1)(j+2))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 1, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) { return c.q(1, 2) - c.ip(a.n + 2, 1); })
        .limit(LimitExpr().one(1, 2))
        .gap(1, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumj2j3", Family::Rational)
        .summand("1/((j+2)(j+3))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 1, 2, 3); })
        .form([](const auto& c, const EvalArgs& a) { return c.q(1, 3) - c.ip(a.n + 3, 1); })
        .limit(LimitExpr().one(1, 3))
        .gap(1, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumj3j4", Family::Rational)
        .summand("1/((j+3)(j+4))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 1, 3, 4); })
        .form([](const auto& c, const EvalArgs& a) { return c.q(1, 4) - c.ip(a.n + 4, 1); })
        .limit(LimitExpr().one(1, 4))
        .gap(1, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumii1i2", Family::Rational)
        .summand("1/(j(j+1)(j+2))")
        .spec([](const EvalArgs& a) { return r3_spec(a.n, 1, 1, 1, 0, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 4) - c.q(1, 2) * c.ip(n + 1, 1) + c.q(1, 2) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(1, 4))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumj1j2j3", Family::Rational)
        .summand("1/((j+1)(j+2)(j+3))")
        .spec([](const EvalArgs& a) { return r3_spec(a.n, 1, 1, 1, 1, 2, 3); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 12) - c.q(1, 2) * c.ip(n + 2, 1) + c.q(1, 2) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().one(1, 12))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumj2j3j4", Family::Rational)
        .summand("1/((j+2)(j+3)(j+4))")
        .spec([](const EvalArgs& a) { return r3_spec(a.n, 1, 1, 1, 2, 3, 4); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 24) - c.q(1, 2) * c.ip(n + 3, 1) + c.q(1, 2) * c.ip(n + 4, 1);
        })
        .limit(LimitExpr().one(1, 24))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumj1j2j3j4", Family::Rational)
        .summand("1/((j+1)(j+2)(j+3)(j+4))")
        .spec([](const EvalArgs& a) {
            SumSpec s = r3_spec(a.n, 1, 1, 1, 1, 2, 3);
            s.x = 4;
            s.y = 1;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 72) - c.q(1, 6) * c.ip(n + 2, 1) + c.q(1, 3) * c.ip(n + 3, 1) -
                   c.q(1, 6) * c.ip(n + 4, 1);
        })
        .limit(LimitExpr().one(1, 72))
        .gap(1, 2, 3, 0)
        .done(out);

    EntryBuilder("lemSumii12", Family::Rational)
        .summand("1/(j(j+1)^2)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 2, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.q(2) - c.H(a.n + 1, 2) - c.ip(a.n + 1, 1);
        })
        .limit(LimitExpr().one(2).pi2(-1, 6))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumii2sq", Family::Rational)
        .summand("1/(j(j+2)^2)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 2, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1) - c.q(1, 2) * c.H(n + 2, 2) - c.q(1, 4) * c.ip(n + 1, 1) -
                   c.q(1, 4) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(1).pi2(-1, 12))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumi12i2", Family::Rational)
        .summand("1/((j+1)^2(j+2))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 1, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.H(a.n + 1, 2) - c.q(3, 2) + c.ip(a.n + 2, 1);
        })
        .limit(LimitExpr().pi2(1, 6).one(-3, 2))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumj1s1j3", Family::Rational)
        .summand("1/((j+1)^2(j+3))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 1, 1, 3); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 2) * c.H(n + 1, 2) - c.q(17, 24) + c.q(1, 4) * c.ip(n + 2, 1) +
                   c.q(1, 4) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().pi2(1, 12).one(-17, 24))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumi1sqi4", Family::Rational)
        .summand("1/((j+1)^2(j+4))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 1, 1, 4); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 3) * c.H(n + 1, 2) - c.q(49, 108) + c.q(1, 9) * c.ip(n + 2, 1) +
                   c.q(1, 9) * c.ip(n + 3, 1) + c.q(1, 9) * c.ip(n + 4, 1);
        })
        .limit(LimitExpr().pi2(1, 18).one(-49, 108))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumi1i2sq", Family::Rational)
        .summand("1/((j+1)(j+2)^2)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 2, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.q(7, 4) - c.H(a.n + 2, 2) - c.ip(a.n + 2, 1);
        })
        .limit(LimitExpr().one(7, 4).pi2(-1, 6))
        .gap(1, 2, 2, 0)
        .done(out);

    // sum 1/((j+2)^2(j+m)): three-branch direct form
    EntryBuilder("lemSumj2jm", Family::Rational)
        .summand("1/((j+2)^2(j+m))")
        .param_m(1, 8)
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 1, 2, a.m); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            int m = a.m;
            if (m == 1) return c.q(7, 4) - c.H(n + 2, 2) - c.ip(n + 2, 1);
            if (m == 2) return c.H(n + 2, 3) - c.q(9, 8);
            std::int64_t d = m - 2;
            return c.H(n + 2, 2) * c.ip(d, 1) - c.q(5, 4) * c.ip(d, 1) + c.q(3, 2) * c.ip(d, 2) -
                   c.H(m, 1) * c.ip(d, 2) + c.ip(d, 2) * c.tail(n + 3, n + m, 1);
        })
        .limit_fn([](const EvalArgs& a) {
            int m = a.m;
            if (m == 1) return LimitExpr().one(7, 4).pi2(-1, 6);
            if (m == 2) return LimitExpr().zeta3(1).one(-9, 8);
            Rational d(m - 2);
            Rational ones = -Rational(5, 4) / d + Rational(3, 2) / (d * d) -
                            harmonic(m, 1) / (d * d);
            return LimitExpr().one_r(ones).pi2_r(Rational(1, 6) / d);
        })
        .gap(2, 1, 2, 0)
        .done(out);

    EntryBuilder("lemSumj2sqj4", Family::Rational)
        .summand("1/((j+2)^2(j+4))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 1, 2, 4); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 2) * c.H(n + 2, 2) - c.q(37, 48) + c.q(1, 4) * c.ip(n + 3, 1) +
                   c.q(1, 4) * c.ip(n + 4, 1);
        })
        .limit(LimitExpr().pi2(1, 12).one(-37, 48))
        .gap(1, 2, 2, 0)
        .done(out);

    EntryBuilder("lemSumi1i2cb", Family::Rational)
        .summand("1/((j+1)(j+2)^3)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 3, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(23, 8) - c.H(n + 2, 2) - c.H(n + 2, 3) - c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(23, 8).pi2(-1, 6).zeta3(-1))
        .gap(1, 2, 3, 0)
        .done(out);

    EntryBuilder("lemSumii1cb", Family::Rational)
        .summand("1/(j(j+1)^3)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 3, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(3) - c.H(n + 1, 2) - c.H(n + 1, 3) - c.ip(n + 1, 1);
        })
        .limit(LimitExpr().one(3).pi2(-1, 6).zeta3(-1))
        .gap(1, 2, 3, 0)
        .done(out);

    EntryBuilder("lemSumii2cb", Family::Rational)
        .summand("1/(j(j+2)^3)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 1, 3, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 2) * (c.q(17, 8) - c.q(1, 2) * c.H(n + 2, 2) - c.H(n + 2, 3) -
                                c.q(1, 4) * c.ip(n + 1, 1) - c.q(1, 4) * c.ip(n + 2, 1));
        })
        .limit(LimitExpr().one(17, 16).pi2(-1, 24).zeta3(-1, 2))
        .gap(1, 2, 3, 0)
        .done(out);

    EntryBuilder("lemSumj1sqj2sq", Family::Rational)
        .summand("1/((j+1)^2(j+2)^2)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 2, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(2) * c.H(n + 1, 2) - c.q(13, 4) + c.q(2) * c.ip(n + 2, 1) +
                   c.ip(n + 2, 2);
        })
        .limit(LimitExpr().pi2(1, 3).one(-13, 4))
        .gap(1, 2, 3, 0)
        .done(out);

    EntryBuilder("lemSumj1quj2", Family::Rational)
        .summand("1/((j+1)^4(j+2))")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 4, 1, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.H(n + 1, 2) - c.H(n + 1, 3) + c.H(n + 1, 4) - c.q(3, 2) + c.ip(n + 2, 1);
        })
        .limit(LimitExpr().pi4(1, 90).zeta3(-1).pi2(1, 6).one(-3, 2))
        .gap(1, 2, 4, 0)
        .done(out);

    EntryBuilder("lemSumj1quj2sq", Family::Rational)
        .summand("1/((j+1)^4(j+2)^2)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 4, 2, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(4) * c.H(n + 1, 2) - c.q(2) * c.H(n + 1, 3) + c.H(n + 1, 4) -
                   c.q(21, 4) + c.q(4) * c.ip(n + 2, 1) + c.ip(n + 2, 2);
        })
        .limit(LimitExpr().pi4(1, 90).zeta3(-2).pi2(2, 3).one(-21, 4))
        .gap(1, 2, 5, 0)
        .done(out);

    EntryBuilder("lemSumj1sqj2qu", Family::Rational)
        .summand("1/((j+1)^2(j+2)^4)")
        .spec([](const EvalArgs& a) { return r2_spec(a.n, 2, 4, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(4) * c.H(n + 1, 2) + c.q(2) * c.H(n + 2, 3) + c.H(n + 2, 4) -
                   c.q(161, 16) + c.q(4) * c.ip(n + 2, 1) + c.q(3) * c.ip(n + 2, 2);
        })
        .limit(LimitExpr().pi4(1, 90).zeta3(2).pi2(2, 3).one(-161, 16))
        .gap(1, 2, 5, 0)
        .done(out);

    EntryBuilder("lemSumii1sqi2", Family::Rational)
        .summand("1/(j(j+1)^2(j+2))")
        .spec([](const EvalArgs& a) { return r3_spec(a.n, 1, 2, 1, 0, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(7, 4) - c.H(n + 1, 2) - c.q(1, 2) * c.ip(n + 1, 1) -
                   c.q(1, 2) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(7, 4).pi2(-1, 6))
        .gap(1, 2, 3, 0)
        .done(out);

    EntryBuilder("lemSumii1i2sq", Family::Rational)
        .summand("1/(j(j+1)(j+2)^2)")
        .spec([](const EvalArgs& a) { return r3_spec(a.n, 1, 1, 2, 0, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 2) * c.H(n + 2, 2) - c.q(3, 4) - c.q(1, 4) * c.ip(n + 1, 1) +
                   c.q(3, 4) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().pi2(1, 12).one(-3, 4))
        .gap(1, 2, 3, 0)
        .done(out);
}

} // namespace harmonica
