#include "harmonica/catalog.hpp"

// Sums linear in H_{j,1}. Open sums over H_{j,1}/j^p that a right-hand side
// leaves unresolved are evaluated by literal summation (c.S1), as the
// statements intend.

namespace harmonica {

void register_linear_h1_entries(std::vector<FormulaEntry>& out) {
    EntryBuilder("lemSumHj1", Family::LinearH1)
        .summand("H_{j,1}")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 0, 0, 0, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(n + 1) * c.H(n, 1) - c.q(n);
        })
        .divergent("n ln n")
        .done(out);

    EntryBuilder("lemSumHii1", Family::LinearH1)
        .summand("H_{j,1}/j")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 0, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto h = c.H(a.n, 1);
            return c.q(1, 2) * (h * h + c.H(a.n, 2));
        })
        .divergent("1/2 ln^2 n")
        .done(out);

    EntryBuilder("lemSumHj1j2", Family::LinearH1)
        .summand("H_{j,1}/(j+2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 2, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 2) * (h * h - c.H(n, 2)) - 1 + h * c.ip(n + 1, 1) +
                   h * c.ip(n + 2, 1) + c.ip(n + 1, 1);
        })
        .divergent("1/2 ln^2 n")
        .done(out);

    EntryBuilder("lemSumHj1j3", Family::LinearH1)
        .summand("H_{j,1}/(j+3)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 3, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 2) * (h * h - c.H(n, 2)) - c.q(21, 12) + h * c.ip(n + 1, 1) +
                   h * c.ip(n + 2, 1) + h * c.ip(n + 3, 1) + c.q(3, 2) * c.ip(n + 1, 1) +
                   c.q(1, 2) * c.ip(n + 2, 1);
        })
        .divergent("1/2 ln^2 n")
        .done(out);

    EntryBuilder("lemSumHj1j4", Family::LinearH1)
        .summand("H_{j,1}/(j+4)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 0, 4, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 2) * (h * h - c.H(n, 2)) - c.q(85, 36) + h * c.ip(n + 1, 1) +
                   h * c.ip(n + 2, 1) + h * c.ip(n + 3, 1) + h * c.ip(n + 4, 1) +
                   c.q(11, 6) * c.ip(n + 1, 1) + c.q(5, 6) * c.ip(n + 2, 1) +
                   c.q(1, 3) * c.ip(n + 3, 1);
        })
        .divergent("1/2 ln^2 n")
        .done(out);

    EntryBuilder("lemSumHiii1", Family::LinearH1)
        .summand("H_{j,1}/(j(j+1))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 0, 1, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.H(a.n, 2) - c.H(a.n, 1) * c.ip(a.n + 1, 1);
        })
        .limit(LimitExpr().pi2(1, 6))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHiii2", Family::LinearH1)
        .summand("H_{j,1}/(j(j+2))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 0, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            // proof's final line; the statement drops a 1/(n+1)^2 piece
            return c.q(1, 2) * (c.q(1) + c.H(n + 2, 2) - c.H(n + 1, 1) * c.ip(n + 1, 1) -
                                c.H(n + 2, 1) * c.ip(n + 2, 1) - c.ip(n + 2, 1));
        })
        .limit(LimitExpr().one(1, 2).pi2(1, 12))
        .gap(2, 1, 1, 1)
        .erratum("statement disagrees with the oracle by 1/(2(n+1)^2); proof's final line used")
        .done(out);

    EntryBuilder("lemSumHii1i2", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+2))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 1, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(1) - c.H(n, 1) * c.ip(n + 2, 1) - c.ip(n + 1, 1);
        })
        .limit(LimitExpr().one(1))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1j3", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+3))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 1, 3, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(7, 8) - h * c.q(1, 2) * c.ip(n + 2, 1) - h * c.q(1, 2) * c.ip(n + 3, 1) -
                   c.q(3, 4) * c.ip(n + 1, 1) - c.q(1, 4) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(7, 8))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1j4", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+4))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 1, 4, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(85, 108) - h * c.q(1, 3) * c.ip(n + 2, 1) -
                   h * c.q(1, 3) * c.ip(n + 3, 1) - h * c.q(1, 3) * c.ip(n + 4, 1) -
                   c.q(11, 18) * c.ip(n + 1, 1) - c.q(5, 18) * c.ip(n + 2, 1) -
                   c.q(1, 9) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().one(85, 108))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHj1j2j4", Family::LinearH1)
        .summand("H_{j,1}/((j+2)(j+4))")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 1, 2, 4, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(49, 72) - h * c.q(1, 2) * c.ip(n + 3, 1) - h * c.q(1, 2) * c.ip(n + 4, 1) -
                   c.q(5, 12) * c.ip(n + 1, 1) - c.q(5, 12) * c.ip(n + 2, 1) -
                   c.q(1, 6) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().one(49, 72))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHiip1sq", Family::LinearH1)
        .summand("H_{j,1}/(j+1)^2")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 0, 1, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            return c.S1(a.n + 1, 2) - c.H(a.n + 1, 3);
        })
        .limit(LimitExpr().zeta3(1))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHiip2sq", Family::LinearH1)
        .summand("H_{j,1}/(j+2)^2")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 0, 2, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.S1(n + 2, 2) + c.H(n + 2, 2) - c.H(n + 2, 3) - 2 + c.ip(n + 2, 1);
        })
        .limit(LimitExpr().zeta3(1).pi2(1, 6).one(-2))
        .gap(2, 1, 1, 1)
        .done(out);

    EntryBuilder("lemSumHii1i2sq", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+2)^2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 2, 1, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(3) - c.H(n + 2, 2) + c.H(n + 2, 3) - c.S1(n + 2, 2) -
                   c.H(n + 1, 1) * c.ip(n + 2, 1) - c.q(2) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(3).pi2(-1, 6).zeta3(-1))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHiii1sq", Family::LinearH1)
        .summand("H_{j,1}/(j(j+1)^2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 2, 0, 1, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.H(n, 2) + c.H(n + 1, 3) - c.S1(n + 1, 2) - c.H(n, 1) * c.ip(n + 1, 1);
        })
        .limit(LimitExpr().pi2(1, 6).zeta3(-1))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHiii2sq", Family::LinearH1)
        .summand("H_{j,1}/(j(j+2)^2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 1, 2, 0, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            return c.q(5, 4) + c.q(1, 2) * c.H(n + 2, 3) - c.q(1, 4) * c.H(n + 2, 2) -
                   c.q(1, 2) * c.S1(n + 2, 2) - c.H(n + 1, 1) * c.q(1, 4) * c.ip(n + 1, 1) -
                   c.H(n + 2, 1) * c.q(1, 4) * c.ip(n + 2, 1) - c.q(3, 4) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(5, 4).zeta3(-1, 2).pi2(-1, 24))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHii1sqi2sq", Family::LinearH1)
        .summand("H_{j,1}/((j+1)^2(j+2)^2)")
        .spec([](const EvalArgs& a) { return g_spec(a.n, 2, 2, 1, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(2) * c.S1(n, 2) + c.H(n, 2) - c.q(2) * c.H(n, 3) - 4 +
                   c.q(2) * h * c.ip(n + 2, 1) + c.q(3) * c.ip(n + 1, 1) +
                   c.q(2) * h * c.ip(n + 1, 2) + h * c.ip(n + 2, 2) + c.ip(n + 1, 2);
        })
        .limit(LimitExpr().zeta3(2).pi2(1, 6).one(-4))
        .gap(2, 1, 3, 1)
        .done(out);

    EntryBuilder("lemSumHiii1i2", Family::LinearH1)
        .summand("H_{j,1}/(j(j+1)(j+2))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 0, 1, 1);
            s.w = 1;
            s.u = 2;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 2) * (c.H(n, 2) - 1 - h * c.ip(n + 1, 1) + h * c.ip(n + 2, 1) +
                                c.ip(n + 1, 1));
        })
        .limit(LimitExpr().pi2(1, 12).one(-1, 2))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1j2j3", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+2)(j+3))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 1);
            s.w = 1;
            s.u = 3;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 8) - h * c.q(1, 2) * c.ip(n + 2, 1) + h * c.q(1, 2) * c.ip(n + 3, 1) -
                   c.q(1, 4) * c.ip(n + 1, 1) + c.q(1, 4) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().one(1, 8))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1j2j4", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+2)(j+4))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 1);
            s.w = 1;
            s.u = 4;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(23, 216) - h * c.q(1, 3) * c.ip(n + 2, 1) + h * c.q(1, 6) * c.ip(n + 3, 1) +
                   h * c.q(1, 6) * c.ip(n + 4, 1) - c.q(7, 36) * c.ip(n + 1, 1) +
                   c.q(5, 36) * c.ip(n + 2, 1) + c.q(1, 18) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().one(23, 216))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1sqj2j3", Family::LinearH1)
        .summand("H_{j,1}/((j+1)^2(j+2)(j+3))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 2, 1, 1, 2, 1);
            s.w = 1;
            s.u = 3;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 2) * c.S1(n, 2) - c.q(1, 2) * c.H(n, 3) - c.q(9, 16) +
                   h * c.q(3, 4) * c.ip(n + 2, 1) - h * c.q(1, 4) * c.ip(n + 3, 1) +
                   c.q(5, 8) * c.ip(n + 1, 1) - c.q(1, 8) * c.ip(n + 2, 1) +
                   h * c.q(1, 2) * c.ip(n + 1, 2);
        })
        .limit(LimitExpr().zeta3(1, 2).one(-9, 16))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1sqj2j4", Family::LinearH1)
        .summand("H_{j,1}/((j+1)^2(j+2)(j+4))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 2, 1, 1, 2, 1);
            s.w = 1;
            s.u = 4;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 3) * c.S1(n, 2) - c.q(1, 3) * c.H(n, 3) - c.q(239, 648) +
                   h * c.q(4, 9) * c.ip(n + 2, 1) - h * c.q(1, 18) * c.ip(n + 3, 1) -
                   h * c.q(1, 18) * c.ip(n + 4, 1) + c.q(43, 108) * c.ip(n + 1, 1) -
                   c.q(5, 108) * c.ip(n + 2, 1) - c.q(1, 54) * c.ip(n + 3, 1) +
                   h * c.q(1, 3) * c.ip(n + 1, 2);
        })
        .limit(LimitExpr().zeta3(1, 3).one(-239, 648))
        .gap(2, 1, 2, 1)
        .done(out);

    EntryBuilder("lemSumHj1j1j2j3j4", Family::LinearH1)
        .summand("H_{j,1}/((j+1)(j+2)(j+3)(j+4))")
        .spec([](const EvalArgs& a) {
            SumSpec s = g_spec(a.n, 1, 1, 1, 2, 1);
            s.w = 1;
            s.u = 3;
            s.y = 1;
            s.x = 4;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 54) - h * c.q(1, 6) * c.ip(n + 2, 1) + h * c.q(1, 3) * c.ip(n + 3, 1) -
                   h * c.q(1, 6) * c.ip(n + 4, 1) - c.q(1, 18) * c.ip(n + 1, 1) +
                   c.q(1, 9) * c.ip(n + 2, 1) - c.q(1, 18) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().one(1, 54))
        .gap(2, 1, 3, 1)
        .done(out);
}

} // namespace harmonica
