#include "harmonica/catalog.hpp"

// Sums linear in H_{j,2} (one entry carries H_{j,3}), including the three
// identities over (j+1)^a (j+2)^b, whose duplicate *app labels resolve as
// aliases, and the shifted-numerator variants H_{j+1,2}, H_{j+2,2}.

namespace harmonica {

void register_linear_h2_entries(std::vector<FormulaEntry>& out) {
    EntryBuilder("lemSumHi2", Family::LinearH2)
        .summand("H_{j,2}")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 0, 0, 0, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.q(a.n + 1) * c.H(a.n, 2) - c.H(a.n, 1);
        })
        .divergent("(pi^2/6) n")
        .done(out);

    EntryBuilder("lemSumHi2i", Family::LinearH2)
        .summand("H_{j,2}/j")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 0, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.H(n, 1) * c.H(n, 2) + c.H(n, 3) - c.S1(n, 2);
        })
        .divergent("(pi^2/6) ln n")
        .done(out);

    EntryBuilder("lemSumHi2i1", Family::LinearH2)
        .summand("H_{j,2}/(j+1)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 1, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.H(n, 1) * c.H(n, 2) - c.S1(n, 2) + c.H(n, 2) * c.ip(n + 1, 1);
        })
        .divergent("(pi^2/6) ln n")
        .done(out);

    EntryBuilder("lemSumHi2i2", Family::LinearH2)
        .summand("H_{j,2}/(j+2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 2, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.H(n, 1) * h2 - h2 - c.S1(n, 2) + 1 + h2 * c.ip(n + 1, 1) +
                   h2 * c.ip(n + 2, 1) - c.ip(n + 1, 1);
        })
        .divergent("(pi^2/6) ln n")
        .done(out);

    EntryBuilder("lemSumHj2j3", Family::LinearH2)
        .summand("H_{j,2}/(j+3)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 3, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            // proof's final line; the statement duplicates one H_{n,2}/(n+3)
            // term where H_{n,2}/(n+1) is meant
            return (c.H(n + 2, 1) - c.q(3, 2)) * c.H(n + 2, 2) - c.S1(n + 2, 2) + c.q(11, 8) +
                   c.H(n + 1, 2) * c.ip(n + 3, 1) - c.q(5, 4) * c.ip(n + 2, 1) -
                   c.q(1, 4) * c.ip(n + 3, 1) + c.q(3, 2) * c.ip(n + 2, 2);
        })
        .divergent("(pi^2/6) ln n")
        .erratum("statement repeats H_{n,2}/(n+3); implemented from the proof's final line")
        .done(out);

    EntryBuilder("lemSumHj2j4", Family::LinearH2)
        .summand("H_{j,2}/(j+4)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 4, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return (c.H(n + 2, 1) - c.q(11, 6)) * c.H(n + 2, 2) - c.S1(n + 2, 2) +
                   c.q(341, 216) + c.H(n + 1, 2) * c.ip(n + 3, 1) +
                   c.H(n + 1, 2) * c.ip(n + 4, 1) - c.q(49, 36) * c.ip(n + 2, 1) -
                   c.q(13, 36) * c.ip(n + 3, 1) - c.q(1, 9) * c.ip(n + 4, 1) +
                   c.q(11, 6) * c.ip(n + 2, 2);
        })
        .divergent("(pi^2/6) ln n")
        .done(out);

    EntryBuilder("lemSumHi2ii1", Family::LinearH2)
        .summand("H_{j,2}/(j(j+1))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 0, 1, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.H(a.n, 3) - c.H(a.n, 2) * c.ip(a.n + 1, 1);
        })
        .limit(LimitExpr().zeta3(1))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2ii2", Family::LinearH2)
        .summand("H_{j,2}/(j(j+2))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 0, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 2) * (h2 + c.H(n, 3) - 1 - h2 * c.ip(n + 1, 1) - h2 * c.ip(n + 2, 1) +
                                c.ip(n + 1, 1));
        })
        .limit(LimitExpr().zeta3(1, 2).pi2(1, 12).one(-1, 2))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2i1i2", Family::LinearH2)
        .summand("H_{j,2}/((j+1)(j+2))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 1, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return h2 - 1 - h2 * c.ip(n + 2, 1) + c.ip(n + 1, 1);
        })
        .limit(LimitExpr().pi2(1, 6).one(-1))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHj2j1j3", Family::LinearH2)
        .summand("H_{j,2}/((j+1)(j+3))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 1, 3, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(3, 4) * h2 - c.q(11, 16) - h2 * c.q(1, 2) * c.ip(n + 2, 1) -
                   h2 * c.q(1, 2) * c.ip(n + 3, 1) + c.q(5, 8) * c.ip(n + 1, 1) +
                   c.q(1, 8) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().pi2(1, 8).one(-11, 16))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHj2j1j4", Family::LinearH2)
        .summand("H_{j,2}/((j+1)(j+4))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 1, 4, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(11, 18) * h2 - c.q(341, 648) - h2 * c.q(1, 3) * c.ip(n + 2, 1) -
                   h2 * c.q(1, 3) * c.ip(n + 3, 1) - h2 * c.q(1, 3) * c.ip(n + 4, 1) +
                   c.q(49, 108) * c.ip(n + 1, 1) + c.q(13, 108) * c.ip(n + 2, 1) +
                   c.q(1, 27) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().pi2(11, 108).one(-341, 648))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHj2j2j4", Family::LinearH2)
        .summand("H_{j,2}/((j+2)(j+4))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 2, 4, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(5, 12) * h2 - c.q(125, 432) - h2 * c.q(1, 2) * c.ip(n + 3, 1) -
                   h2 * c.q(1, 2) * c.ip(n + 4, 1) + c.q(13, 72) * c.ip(n + 1, 1) +
                   c.q(13, 72) * c.ip(n + 2, 1) + c.q(1, 18) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().pi2(5, 72).one(-125, 432))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHj2j3j4", Family::LinearH2)
        .summand("H_{j,2}/((j+3)(j+4))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 3, 4, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 3) * h2 - c.q(11, 54) - h2 * c.ip(n + 4, 1) +
                   c.q(1, 9) * c.ip(n + 1, 1) + c.q(1, 9) * c.ip(n + 2, 1) +
                   c.q(1, 9) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().pi2(1, 18).one(-11, 54))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2p1ii1", Family::LinearH2)
        .summand("H_{j+1,2}/(j(j+1))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 0, 1, 2);
            s.shift = 1;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(3) - c.H(n + 1, 2) - c.H(n + 1, 2) * c.ip(n + 1, 1) - c.ip(n + 1, 1);
        })
        .limit(LimitExpr().one(3).pi2(-1, 6))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2p1ii2", Family::LinearH2)
        .summand("H_{j+1,2}/(j(j+2))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 0, 2, 2);
            s.shift = 1;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n + 1, 2);
            // proof's final line; the statement's H_{n,.} variant misses
            // boundary pieces
            return c.q(1, 2) * (c.q(5, 2) + c.H(n + 1, 3) - h2 - h2 * c.ip(n + 1, 1) -
                                h2 * c.ip(n + 2, 1) - c.ip(n + 1, 1));
        })
        .limit(LimitExpr().one(5, 4).zeta3(1, 2).pi2(-1, 12))
        .gap(2, 1, 1, 0)
        .erratum("statement disagrees with the oracle at every n; proof's final line used")
        .done(out);

    EntryBuilder("lemSumHi2p1i1i2", Family::LinearH2)
        .summand("H_{j+1,2}/((j+1)(j+2))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 2);
            s.shift = 1;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.H(n + 1, 3) - c.q(1, 2) - c.H(n + 1, 2) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().zeta3(1).one(-1, 2))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2p2ii1", Family::LinearH2)
        .summand("H_{j+2,2}/(j(j+1))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 0, 1, 2);
            s.shift = 2;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(9, 4) - c.q(1, 2) * c.H(n + 1, 2) - c.H(n + 1, 2) * c.ip(n + 1, 1) -
                   c.q(5, 4) * c.ip(n + 1, 1) + c.q(3, 4) * c.ip(n + 2, 1) +
                   c.q(1, 2) * c.ip(n + 2, 2);
        })
        .limit(LimitExpr().one(9, 4).pi2(-1, 12))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2p2ii2", Family::LinearH2)
        .summand("H_{j+2,2}/(j(j+2))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 0, 2, 2);
            s.shift = 2;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1, 2) * (c.q(37, 8) - c.q(3, 2) * c.H(n + 1, 2) -
                                c.H(n + 1, 2) * c.ip(n + 1, 1) - c.H(n + 2, 2) * c.ip(n + 2, 1) -
                                c.q(5, 4) * c.ip(n + 1, 1) - c.q(1, 4) * c.ip(n + 2, 1) -
                                c.q(1, 2) * c.ip(n + 2, 2));
        })
        .limit(LimitExpr().one(37, 16).pi2(-1, 8))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2p2i1i2", Family::LinearH2)
        .summand("H_{j+2,2}/((j+1)(j+2))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 2);
            s.shift = 2;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(19, 8) - c.H(n + 2, 2) - c.H(n + 2, 2) * c.ip(n + 2, 1) - c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(19, 8).pi2(-1, 6))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2isq", Family::LinearH2)
        .summand("H_{j,2}/j^2")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 0, 0, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto h2 = c.H(a.n, 2);
            return c.q(1, 2) * (h2 * h2 + c.H(a.n, 4));
        })
        .limit(LimitExpr().pi4(7, 360))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2i1sq", Family::LinearH2)
        .summand("H_{j,2}/(j+1)^2")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 0, 1, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto h2 = c.H(a.n + 1, 2);
            return c.q(1, 2) * (h2 * h2 - c.H(a.n + 1, 4));
        })
        .limit(LimitExpr().pi4(1, 120))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2i2sq", Family::LinearH2)
        .summand("H_{j,2}/(j+2)^2")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 0, 2, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 2) * (h2 * h2 - c.H(n, 4)) - c.q(2) * h2 + 3 + h2 * c.ip(n + 1, 2) +
                   h2 * c.ip(n + 2, 2) - c.q(2) * c.ip(n + 1, 1) - c.ip(n + 1, 2);
        })
        .limit(LimitExpr().one(3).pi4(1, 120).pi2(-1, 3))
        .gap(2, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHj2j1j2j3", Family::LinearH2)
        .summand("H_{j,2}/((j+1)(j+2)(j+3))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 2);
            s.w = 1;
            s.u = 3;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 4) * h2 - c.q(5, 16) - h2 * c.q(1, 2) * c.ip(n + 2, 1) +
                   h2 * c.q(1, 2) * c.ip(n + 3, 1) + c.q(3, 8) * c.ip(n + 1, 1) -
                   c.q(1, 8) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().pi2(1, 24).one(-5, 16))
        .gap(2, 1, 2, 0)
        .done(out);

    EntryBuilder("lemSumHj2j1j2j4", Family::LinearH2)
        .summand("H_{j,2}/((j+1)(j+2)(j+4))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 2);
            s.w = 1;
            s.u = 4;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(7, 36) * h2 - c.q(307, 1296) - h2 * c.q(1, 3) * c.ip(n + 2, 1) +
                   h2 * c.q(1, 6) * c.ip(n + 3, 1) + h2 * c.q(1, 6) * c.ip(n + 4, 1) +
                   c.q(59, 216) * c.ip(n + 1, 1) - c.q(13, 216) * c.ip(n + 2, 1) -
                   c.q(1, 54) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().pi2(7, 216).one(-307, 1296))
        .gap(2, 1, 2, 0)
        .done(out);

    // the (j+1)^a (j+2)^b family
    EntryBuilder("lemSumHi2i1sqi2", Family::LinearH2)
        .alias("lemSumHi2i1sqi2app")
        .summand("H_{j,2}/((j+1)^2(j+2))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 1, 1, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 2) * h2 * h2 - h2 - c.q(1, 2) * c.H(n, 4) + 1 + h2 * c.ip(n + 2, 1) -
                   c.ip(n + 1, 1) + h2 * c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi4(1, 120).pi2(-1, 6).one(1))
        .gap(10, 1, 2, 0)
        .done(out);

    EntryBuilder("lemSumHi2i1i2sq", Family::LinearH2)
        .alias("lemSumHi2i1i2sqapp")
        .summand("H_{j,2}/((j+1)(j+2)^2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 2, 1, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(3) * h2 - c.q(1, 2) * h2 * h2 + c.q(1, 2) * c.H(n, 4) - 4 -
                   h2 * c.ip(n + 2, 1) + c.q(3) * c.ip(n + 1, 1) - h2 * c.ip(n + 1, 2) -
                   h2 * c.ip(n + 2, 2) + c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi2(1, 2).pi4(-1, 120).one(-4))
        .gap(10, 1, 2, 0)
        .done(out);

    EntryBuilder("lemSumHi2i1sqi2sq", Family::LinearH2)
        .alias("lemSumHi2i1sqi2sqapp")
        .summand("H_{j,2}/((j+1)^2(j+2)^2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 2, 1, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return h2 * h2 - c.q(4) * h2 - c.H(n, 4) + 5 + c.q(2) * h2 * c.ip(n + 2, 1) +
                   c.q(2) * h2 * c.ip(n + 1, 2) + h2 * c.ip(n + 2, 2) -
                   c.q(4) * c.ip(n + 1, 1) - c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi4(1, 60).pi2(-2, 3).one(5))
        .gap(10, 1, 3, 0)
        .done(out);

    EntryBuilder("lemSumHi3i", Family::LinearH2)
        .summand("H_{j,3}/j")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 0, 0, 3); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.H(n, 1) * c.H(n, 3) + c.H(n, 4) - c.S1(n, 3);
        })
        .divergent("zeta(3) ln n")
        .done(out);
}

} // namespace harmonica
