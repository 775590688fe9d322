#include "harmonica/catalog.hpp"

// The three mixed-product sums H_{j+p,1} H_{j+p,2} / j, p = 0, 1, 2.

namespace harmonica {

void register_mixed_entries(std::vector<FormulaEntry>& out) {
    EntryBuilder("lemSumHi1Hi2i", Family::Mixed)
        .summand("H_{j,1}H_{j,2}/j")
        .spec([](const EvalArgs& a) { return mixed_spec(a.n, 0); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n, 1);
            return c.q(1, 2) * (h1 * h1 * c.H(n, 2) - c.H(n, 4) + c.S2(n, 2) +
                                c.q(2) * c.S1(n, 3) - c.S1sq(n, 2));
        })
        .divergent("(pi^2/12) ln^2 n")
        .done(out);

    EntryBuilder("lemSumHi1p1Hi2p1i", Family::Mixed)
        .summand("H_{j+1,1}H_{j+1,2}/j")
        .spec([](const EvalArgs& a) { return mixed_spec(a.n, 1); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n, 1);
            return c.q(1, 2) * h1 * h1 * c.H(n, 2) + c.H(n, 3) + c.q(1, 2) * c.S2(n, 2) +
                   c.S1(n, 3) + 3 - c.q(1, 2) * c.S1sq(n, 2) - c.S1(n + 1, 2) -
                   c.q(1, 2) * c.H(n, 4) - h1 * c.ip(n + 1, 1) - c.H(n, 2) * c.ip(n + 1, 1) -
                   c.ip(n + 1, 1) - c.ip(n + 1, 2);
        })
        .divergent("(pi^2/12) ln^2 n")
        .done(out);

    EntryBuilder("lemSumHi1p2Hi2p2i", Family::Mixed)
        .summand("H_{j+2,1}H_{j+2,2}/j")
        .spec([](const EvalArgs& a) { return mixed_spec(a.n, 2); })
        .form([](const auto& c, const EvalArgs& a) {
            auto n = a.n;
            auto h1 = c.H(n, 1);
            auto h2 = c.H(n, 2);
            return c.q(1, 2) * h1 * h1 * h2 + c.q(1, 2) * c.S2(n, 2) + c.S1(n, 3) -
                   c.q(1, 2) * c.S1sq(n, 2) - c.q(3, 2) * c.S1(n, 2) - c.q(1, 2) * h2 +
                   c.q(3, 2) * c.H(n, 3) - c.q(1, 2) * c.H(n, 4) + c.q(93, 16) -
                   c.q(5, 4) * h1 * c.ip(n + 1, 1) - c.q(1, 4) * h1 * c.ip(n + 2, 1) -
                   c.q(3, 2) * h2 * c.ip(n + 1, 1) - c.q(1, 2) * h2 * c.ip(n + 2, 1) -
                   c.q(17, 8) * c.ip(n + 1, 1) + c.q(1, 8) * c.ip(n + 2, 1) -
                   c.q(3, 2) * h1 * c.ip(n + 1, 2) - c.q(1, 2) * h1 * c.ip(n + 2, 2) -
                   c.q(9, 4) * c.ip(n + 1, 2) + c.q(1, 4) * c.ip(n + 2, 2) -
                   c.q(3, 2) * c.ip(n + 1, 3) - c.q(1, 2) * c.ip(n + 2, 3);
        })
        .divergent("(pi^2/12) ln^2 n")
        .done(out);
}

} // namespace harmonica
