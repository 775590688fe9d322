#include "harmonica/catalog.hpp"

// Sums quadratic in H_{j,2}, including the (j+1)(j+2) product and the
// Abel-summation identity for the square over j^2.

namespace harmonica {

void register_quadratic_h2_entries(std::vector<FormulaEntry>& out) {
    EntryBuilder("lemSumHi2sqi1app", Family::QuadraticH2)
        .summand("H_{j,2}^2/(j+1)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, 1, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.S2sq(n, 1) - c.q(2) * c.S2(n, 3) + c.H(n, 5) + h2 * h2 * c.ip(n + 1, 1);
        })
        .divergent("ln n")
        .done(out);

    EntryBuilder("lemSumHi2sqi2", Family::QuadraticH2)
        .summand("H_{j,2}^2/(j+2)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 0, 2, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.S2sq(n, 1) - c.q(2) * c.S2(n, 3) - h2 * h2 + h2 + c.H(n, 3) + c.H(n, 5) -
                   1 + h2 * h2 * c.ip(n + 1, 1) + h2 * h2 * c.ip(n + 2, 1) -
                   c.q(2) * h2 * c.ip(n + 1, 1) + c.ip(n + 1, 1);
        })
        .divergent("ln n")
        .done(out);

    EntryBuilder("lemSumHi2sqi1i2", Family::QuadraticH2)
        .alias("lemSumHi2sqi1i2app")
        .summand("H_{j,2}^2/((j+1)(j+2))")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 1, 1, 1, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n + 1, 2);
            auto h22 = c.H(n + 2, 2);
            return h2 * h2 - h2 - c.H(n + 1, 3) + 1 - h22 * h22 * c.ip(n + 2, 1) +
                   c.q(2) * h2 * c.ip(n + 2, 1) - c.ip(n + 2, 1) +
                   c.q(2) * h22 * c.ip(n + 2, 3) - c.ip(n + 2, 5);
        })
        .limit(LimitExpr().pi4(1, 36).pi2(-1, 6).zeta3(-1).one(1))
        .gap(4, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2sqisq", Family::QuadraticH2)
        .alias("lemSumHi2sqisqapp")
        .summand("H_{j,2}^2/j^2")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, 0, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 3) * h2 * h2 * h2 + c.S2(n, 4) - c.q(1, 3) * c.H(n, 6);
        })
        .limit(LimitExpr().zeta3sq(1).pi6(19, 22680))
        .gap(4, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2sqip1sq", Family::QuadraticH2)
        .summand("H_{j,2}^2/(j+1)^2")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, 1, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 3) * h2 * h2 * h2 + c.q(2, 3) * c.H(n, 6) - c.S2(n, 4) +
                   h2 * h2 * c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi6(59, 22680).zeta3sq(-1))
        .gap(4, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2sqip2sq", Family::QuadraticH2)
        .summand("H_{j,2}^2/(j+2)^2")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 0, 2, 0, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(1, 3) * h2 * h2 * h2 - c.q(2) * h2 * h2 + c.q(4) * h2 +
                   c.q(2) * c.H(n, 3) + c.H(n, 4) + c.q(2, 3) * c.H(n, 6) - c.S2(n, 4) - 5 -
                   c.q(4) * h2 * c.ip(n + 1, 1) + c.q(4) * c.ip(n + 1, 1) +
                   h2 * h2 * c.ip(n + 1, 2) + h2 * h2 * c.ip(n + 2, 2) -
                   c.q(2) * h2 * c.ip(n + 1, 2) + c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi6(59, 22680).pi4(-2, 45).pi2(2, 3).zeta3(2).zeta3sq(-1).one(-5))
        .gap(4, 1, 1, 0)
        .done(out);

    EntryBuilder("lemSumHi2sqip1sqip2sq", Family::QuadraticH2)
        .summand("H_{j,2}^2/((j+1)^2(j+2)^2)")
        .spec([](const EvalArgs& a) { return v_spec(a.n, 2, 2, 1, 2, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h2 = c.H(n, 2);
            return c.q(2, 3) * h2 * h2 * h2 - c.q(4) * h2 * h2 + c.q(6) * h2 +
                   c.q(4) * c.H(n, 3) + c.H(n, 4) + c.q(4, 3) * c.H(n, 6) -
                   c.q(2) * c.S2(n, 4) - 7 + c.q(2) * h2 * h2 * c.ip(n + 2, 1) -
                   c.q(8) * h2 * c.ip(n + 1, 1) + c.q(6) * c.ip(n + 1, 1) +
                   c.q(2) * h2 * h2 * c.ip(n + 1, 2) + h2 * h2 * c.ip(n + 2, 2) -
                   c.q(2) * h2 * c.ip(n + 1, 2) + c.ip(n + 1, 2);
        })
        .limit(LimitExpr().pi6(59, 11340).pi4(-1, 10).pi2(1).zeta3sq(-2).zeta3(4).one(-7))
        .gap(4, 1, 2, 0)
        .done(out);
}

} // namespace harmonica
