#include "harmonica/catalog.hpp"

// Sums quadratic in H_{j,1}.

namespace harmonica {

void register_quadratic_h1_entries(std::vector<FormulaEntry>& out) {
    EntryBuilder("lemSumHj1sq", Family::QuadraticH1)
        .summand("H_{j,1}^2")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 0, 0, 0, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(n + 1) * h * h - c.q(2 * n + 1) * h + c.q(2 * n);
        })
        .divergent("n ln^2 n")
        .done(out);

    EntryBuilder("lemSumHj1sqj", Family::QuadraticH1)
        .summand("H_{j,1}^2/j")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, 0, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 3) * h * h * h + c.S1(n, 2) - c.q(1, 3) * c.H(n, 3);
        })
        .divergent("1/3 ln^3 n")
        .done(out);

    EntryBuilder("lemSumHj1sqj2", Family::QuadraticH1)
        .summand("H_{j,1}^2/(j+2)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, 2, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 3) * h * h * h - c.S1(n, 2) + c.q(2, 3) * c.H(n, 3) - c.H(n, 2) - 1 +
                   h * h * c.ip(n + 1, 1) + h * h * c.ip(n + 2, 1) +
                   c.q(2) * h * c.ip(n + 1, 1) + c.ip(n + 1, 1);
        })
        .divergent("1/3 ln^3 n")
        .done(out);

    EntryBuilder("lemSumHj1sqj3", Family::QuadraticH1)
        .summand("H_{j,1}^2/(j+3)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, 3, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 3) * h * h * h - c.S1(n, 2) + c.q(2, 3) * c.H(n, 3) -
                   c.q(3, 2) * c.H(n, 2) - c.q(19, 8) + h * h * c.ip(n + 1, 1) +
                   h * h * c.ip(n + 2, 1) + h * h * c.ip(n + 3, 1) +
                   c.q(3) * h * c.ip(n + 1, 1) + h * c.ip(n + 2, 1) +
                   c.q(9, 4) * c.ip(n + 1, 1) + c.q(1, 4) * c.ip(n + 2, 1);
        })
        .divergent("1/3 ln^3 n")
        .done(out);

    EntryBuilder("lemSumHj1sqj4", Family::QuadraticH1)
        .summand("H_{j,1}^2/(j+4)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, 4, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 3) * h * h * h - c.S1(n, 2) + c.q(2, 3) * c.H(n, 3) -
                   c.q(11, 6) * c.H(n, 2) - c.q(809, 216) + h * h * c.ip(n + 1, 1) +
                   h * h * c.ip(n + 2, 1) + h * h * c.ip(n + 3, 1) + h * h * c.ip(n + 4, 1) +
                   c.q(11, 3) * h * c.ip(n + 1, 1) + c.q(5, 3) * h * c.ip(n + 2, 1) +
                   c.q(2, 3) * h * c.ip(n + 3, 1) + c.q(121, 36) * c.ip(n + 1, 1) +
                   c.q(25, 36) * c.ip(n + 2, 1) + c.q(1, 9) * c.ip(n + 3, 1);
        })
        .divergent("1/3 ln^3 n")
        .done(out);

    EntryBuilder("lemSumHisqi1i2", Family::QuadraticH1)
        .alias("lemSumHisqi1i2app")
        .summand("H_{j,1}^2/((j+1)(j+2))")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 1, 1, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.H(n, 2) + 1 - c.q(2) * h * c.ip(n + 1, 1) - c.ip(n + 1, 1) -
                   h * h * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().pi2(1, 6).one(1))
        .gap(2, 1, 1, 2)
        .done(out);

    EntryBuilder("lemSumHj1sqj1j3", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+1)(j+3))")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 1, 1, 3, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n + 1, 1);
            // proof's final line; the statement carries a spurious
            // -H_{n,1}^2/(2(n+1)) term
            return c.q(1, 2) * (c.q(3, 2) * c.H(n + 1, 2) + c.q(19, 8) -
                                h1 * h1 * c.ip(n + 2, 1) - h1 * h1 * c.ip(n + 3, 1) -
                                c.q(3) * h1 * c.ip(n + 2, 1) - h1 * c.ip(n + 3, 1) -
                                c.q(9, 4) * c.ip(n + 2, 1) - c.q(1, 4) * c.ip(n + 3, 1));
        })
        .limit(LimitExpr().pi2(1, 8).one(19, 16))
        .gap(2, 1, 1, 2)
        .erratum("statement has an extra -H_{n,1}^2/(2(n+1)); proof's final line used")
        .done(out);

    EntryBuilder("lemSumHj1sqj1j4", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+1)(j+4))")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 1, 1, 4, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n + 1, 1);
            return c.q(1, 3) *
                   (c.q(11, 6) * c.H(n + 1, 2) + c.q(809, 216) - h1 * h1 * c.ip(n + 2, 1) -
                    h1 * h1 * c.ip(n + 3, 1) - h1 * h1 * c.ip(n + 4, 1) -
                    c.q(11, 3) * h1 * c.ip(n + 2, 1) - c.q(5, 3) * h1 * c.ip(n + 3, 1) -
                    c.q(2, 3) * h1 * c.ip(n + 4, 1) - c.q(121, 36) * c.ip(n + 2, 1) -
                    c.q(25, 36) * c.ip(n + 3, 1) - c.q(1, 9) * c.ip(n + 4, 1));
        })
        .limit(LimitExpr().pi2(11, 108).one(809, 648))
        .gap(2, 1, 1, 2)
        .erratum("statement prints H_{1,1} for H_{n,1} and shifts; proof's final line used")
        .done(out);

    EntryBuilder("lemSumHj1sqj2j4", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+2)(j+4))")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 1, 2, 4, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n + 1, 1);
            return c.q(1, 2) *
                   (c.q(5, 6) * c.H(n + 1, 2) + c.q(593, 216) - h1 * h1 * c.ip(n + 3, 1) -
                    h1 * h1 * c.ip(n + 4, 1) - c.q(5, 3) * h1 * c.ip(n + 2, 1) -
                    c.q(5, 3) * h1 * c.ip(n + 3, 1) - c.q(2, 3) * h1 * c.ip(n + 4, 1) -
                    c.q(85, 36) * c.ip(n + 2, 1) - c.q(25, 36) * c.ip(n + 3, 1) -
                    c.q(1, 9) * c.ip(n + 4, 1));
        })
        .limit(LimitExpr().pi2(5, 72).one(593, 432))
        .gap(2, 1, 1, 2)
        .done(out);

    EntryBuilder("lemSumHj1sqj3j4", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+3)(j+4))")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 1, 3, 4, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n + 1, 1);
            return c.q(1, 3) * c.H(n + 1, 2) + c.q(37, 27) - h1 * h1 * c.ip(n + 4, 1) -
                   c.q(2, 3) * h1 * c.ip(n + 2, 1) - c.q(2, 3) * h1 * c.ip(n + 3, 1) -
                   c.q(2, 3) * h1 * c.ip(n + 4, 1) - c.q(10, 9) * c.ip(n + 2, 1) -
                   c.q(4, 9) * c.ip(n + 3, 1) - c.q(1, 9) * c.ip(n + 4, 1);
        })
        .limit(LimitExpr().pi2(1, 18).one(37, 27))
        .gap(2, 1, 1, 2)
        .done(out);

    EntryBuilder("lemSumHisqip1sqapp", Family::QuadraticH1)
        .summand("H_{j,1}^2/(j+1)^2")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, 1, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.S1sq(n, 2) - c.q(2) * c.S1(n, 3) + c.H(n, 4) + h * h * c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi4(11, 360))
        .gap(2, 1, 1, 2)
        .done(out);

    EntryBuilder("lemSumHisqip2sq", Family::QuadraticH1)
        .summand("H_{j,1}^2/(j+2)^2")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, 2, 0, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            // proof's final line (the statement's n-indexed boundary terms
            // do not reproduce the sum)
            return c.S1sq(n + 2, 2) + c.q(2) * c.S1(n + 2, 2) - c.q(2) * c.S1(n + 2, 3) -
                   c.q(2) * c.H(n + 2, 3) + c.H(n + 2, 4) - 3 +
                   c.q(2) * c.H(n + 2, 1) * c.ip(n + 2, 1) + c.q(2) * c.ip(n + 2, 1) -
                   c.ip(n + 2, 2);
        })
        .limit(LimitExpr().pi4(11, 360).zeta3(2).one(-3))
        .gap(2, 1, 1, 2)
        .erratum("statement disagrees with the oracle at every n; proof's final line used")
        .done(out);

    EntryBuilder("lemSumHisqi1i2sq", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+1)(j+2)^2)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 2, 1, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.H(n, 2) + c.q(2) * c.H(n, 3) - c.H(n, 4) + 4 - c.S1sq(n, 2) -
                   c.q(2) * c.S1(n, 2) + c.q(2) * c.S1(n, 3) - h * h * c.ip(n + 2, 1) -
                   c.q(4) * h * c.ip(n + 1, 1) - c.q(3) * c.ip(n + 1, 1) -
                   c.q(2) * h * c.ip(n + 1, 2) - h * h * c.ip(n + 1, 2) -
                   h * h * c.ip(n + 2, 2) - c.ip(n + 1, 2);
        })
        .limit(LimitExpr().one(4).pi2(1, 6).zeta3(-2).pi4(-11, 360))
        .gap(4, 1, 2, 2)
        .done(out);

    EntryBuilder("lemSumHisqi1sqi2sq", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+1)^2(j+2)^2)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 2, 1, 2, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(2) * c.S1sq(n, 2) + c.q(2) * c.S1(n, 2) - c.q(4) * c.S1(n, 3) -
                   c.q(2) * c.H(n, 2) - c.q(2) * c.H(n, 3) + c.q(2) * c.H(n, 4) - 5 +
                   c.q(2) * h * h * c.ip(n + 2, 1) + c.q(6) * h * c.ip(n + 1, 1) +
                   c.q(2) * h * h * c.ip(n + 1, 2) + h * h * c.ip(n + 2, 2) +
                   c.q(2) * h * c.ip(n + 1, 2) + c.q(4) * c.ip(n + 1, 1) + c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi4(11, 180).zeta3(2).pi2(-1, 3).one(-5))
        .gap(4, 1, 3, 2)
        .done(out);

    EntryBuilder("lemSumHj1sqj1j2j3", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+1)(j+2)(j+3))")
        .spec([](const EvalArgs& a) {
            SumSpec s = v_spec(a.n, 1, 1, 1, 2, 1);
            s.w = 1;
            s.u = 3;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(1, 4) * c.H(n, 2) - c.q(3, 16) - h * h * c.q(1, 2) * c.ip(n + 2, 1) +
                   h * h * c.q(1, 2) * c.ip(n + 3, 1) - h * c.q(1, 2) * c.ip(n + 1, 1) +
                   h * c.q(1, 2) * c.ip(n + 2, 1) + c.q(1, 8) * c.ip(n + 1, 1) +
                   c.q(1, 8) * c.ip(n + 2, 1);
        })
        .limit(LimitExpr().pi2(1, 24).one(-3, 16))
        .gap(2, 1, 2, 2)
        .done(out);

    EntryBuilder("lemSumHj1sqj1j2j4", Family::QuadraticH1)
        .summand("H_{j,1}^2/((j+1)(j+2)(j+4))")
        .spec([](const EvalArgs& a) {
            SumSpec s = v_spec(a.n, 1, 1, 1, 2, 1);
            s.w = 1;
            s.u = 4;
            return s;
        })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h = c.H(n, 1);
            return c.q(7, 36) * c.H(n, 2) - c.q(161, 1296) - h * h * c.q(1, 3) * c.ip(n + 2, 1) +
                   h * h * c.q(1, 6) * c.ip(n + 3, 1) + h * h * c.q(1, 6) * c.ip(n + 4, 1) -
                   h * c.q(7, 18) * c.ip(n + 1, 1) + h * c.q(5, 18) * c.ip(n + 2, 1) +
                   h * c.q(1, 9) * c.ip(n + 3, 1) + c.q(13, 216) * c.ip(n + 1, 1) +
                   c.q(25, 216) * c.ip(n + 2, 1) + c.q(1, 54) * c.ip(n + 3, 1);
        })
        .limit(LimitExpr().pi2(7, 216).one(-161, 1296))
        .gap(2, 1, 2, 2)
        .done(out);
}

} // namespace harmonica
