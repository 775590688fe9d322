#include "harmonica/errors.hpp"
#include "harmonica/recursion.hpp"

#include <doctest.h>

#include <random>

using namespace harmonica;

TEST_SUITE_BEGIN("recursion");

namespace {
const HarmonicTable& table() {
    static HarmonicTable t(140, 6);
    return t;
}
} // namespace

TEST_CASE("eval_G examples") {
    auto [v1, t1] = eval_G(g_spec(2, 1, 1, 1, 2, 1), table(), BasePolicy::CatalogFirst);
    CHECK(v1 == Rational(7, 24));
    CHECK(t1.replay() == v1);

    // q = 0, r = 0 is itself a base case
    auto [v2, t2] = eval_G(g_spec(5, 2, 0, 0, 0, 1), table(), BasePolicy::OracleOnly);
    CHECK(v2 == direct_eval(g_spec(5, 2, 0, 0, 0, 1), table()));
    CHECK(t2.nodes.size() == 1);

    auto [v3, t3] = eval_G(g_spec(3, 2, 1, 1, 2, 2), table(), BasePolicy::CatalogFirst);
    CHECK(v3 == direct_eval(g_spec(3, 2, 1, 1, 2, 2), table()));
}

TEST_CASE("eval_V examples") {
    auto [v1, t1] = eval_V(v_spec(2, 1, 1, 1, 2, 1), table(), BasePolicy::CatalogFirst);
    CHECK(v1 == Rational(17, 48)); // brute force 1/6 + (9/4)/12
    CHECK(t1.replay() == v1);

    // V(1,2,0,1,0,1) = H_{1,1}^2/(1+1)^2
    auto [v2, t2] = eval_V(v_spec(1, 2, 0, 1, 0, 1), table(), BasePolicy::OracleOnly);
    CHECK(v2 == Rational(1, 4));

    // Lemma-style base case at m = 2
    auto [v3, t3] = eval_V(v_spec(4, 2, 0, 0, 0, 2), table(), BasePolicy::CatalogFirst);
    Rational rhs = Rational(1, 3) * harmonic(4, 2) * harmonic(4, 2) * harmonic(4, 2) +
                   direct_eval(g_spec(4, 4, 0, 0, 0, 2), table()) -
                   Rational(1, 3) * harmonic(4, 6);
    CHECK(v3 == rhs);
}

TEST_CASE("hypothesis violations rejected") {
    CHECK_THROWS_AS(eval_G(g_spec(5, 1, 0, 1, 0, 1), table(), BasePolicy::OracleOnly),
                    domain_error);
    CHECK_THROWS_AS(eval_G(g_spec(5, 0, 1, 0, 1, 1), table(), BasePolicy::OracleOnly),
                    domain_error);
    CHECK_THROWS_AS(eval_V(g_spec(5, 2, 0, 0, 0, 1), table(), BasePolicy::OracleOnly),
                    domain_error);
    SumSpec third_factor = g_spec(5, 2, 1, 0, 1, 1);
    third_factor.w = 1;
    third_factor.u = 2;
    CHECK_THROWS_AS(eval_G(third_factor, table(), BasePolicy::OracleOnly), domain_error);
}

TEST_CASE("theorem-oracle equivalence on a randomized grid") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<std::int64_t> nd(0, 35), rd(0, 3);
    std::uniform_int_distribution<int> md(1, 2), pqd(0, 4);
    int checked = 0;
    while (checked < 250) {
        int p = pqd(rng), q = pqd(rng);
        if (p + q < 2 || p + q > 4) continue;
        std::int64_t n = nd(rng), r = rd(rng), s = rd(rng);
        int m = md(rng);
        ++checked;
        SumSpec g = g_spec(n, p, q, r, s, m);
        SumSpec v = v_spec(n, p, q, r, s, m);
        Rational g_truth = direct_eval(g, table());
        Rational v_truth = direct_eval(v, table());
        for (BasePolicy policy : {BasePolicy::CatalogFirst, BasePolicy::OracleOnly}) {
            auto [gv, gt] = eval_G(g, table(), policy);
            auto [vv, vt] = eval_V(v, table(), policy);
            CHECK(gv == g_truth);
            CHECK(vv == v_truth);
            CHECK(gt.replay() == gv);
            CHECK(vt.replay() == vv);
        }
    }
}

TEST_CASE("trace leaves are catalog or oracle bases") {
    auto [v, trace] = eval_V(v_spec(6, 2, 2, 1, 3, 2), table(), BasePolicy::CatalogFirst);
    (void)v;
    bool saw_catalog = false;
    for (const auto& node : trace.nodes) {
        if (node.children.empty()) {
            bool is_base = node.rule == ReductionRule::BaseCatalog ||
                           node.rule == ReductionRule::BaseOracle;
            CHECK(is_base);
            CHECK(!node.base.empty());
            if (node.rule == ReductionRule::BaseCatalog) saw_catalog = true;
        }
    }
    CHECK(saw_catalog);
}

TEST_CASE("shift recursions match the oracle") {
    for (ShiftFamily family :
         {ShiftFamily::RationalJm, ShiftFamily::H1OverJm, ShiftFamily::H2OverJm,
          ShiftFamily::H1SqOverJm, ShiftFamily::H1SqOverJmSq, ShiftFamily::H2SqOverJm}) {
        for (int m = 1; m <= 8; ++m)
            for (std::int64_t n : {0, 1, 2, 3, 5, 9, 20, 47}) {
                CAPTURE(to_string(family));
                CAPTURE(m);
                CAPTURE(n);
                CHECK(eval_shift_recursion(family, n, m, table()) ==
                      direct_eval(shift_family_spec(family, n, m), table()));
            }
    }
    CHECK_THROWS_AS(eval_shift_recursion(ShiftFamily::H1OverJm, 5, 0, table()), domain_error);
}

TEST_CASE("shift recursion frozen examples") {
    // (H1_OVER_JM, n=3, m=1) = (1/2)(H_{4,1}^2 - H_{4,2})
    Rational h41 = harmonic(4, 1), h42 = harmonic(4, 2);
    CHECK(eval_shift_recursion(ShiftFamily::H1OverJm, 3, 1, table()) ==
          Rational(1, 2) * (h41 * h41 - h42));
    // (H1_OVER_JM, n=3, m=3) = 1/4 + (3/2)/5 + (11/6)/6
    CHECK(eval_shift_recursion(ShiftFamily::H1OverJm, 3, 3, table()) == Rational(77, 90));
    // (RATIONAL_JM, n=2, m=1) = H_{3,3} - 1
    CHECK(eval_shift_recursion(ShiftFamily::RationalJm, 2, 1, table()) ==
          harmonic(3, 3) - 1);
}

TEST_SUITE_END();
