#include "harmonica/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace harmonica;

TEST_SUITE_BEGIN("oracle");

namespace {
const HarmonicTable& table() {
    static HarmonicTable t(80, 6);
    return t;
}
} // namespace

TEST_CASE("direct_eval examples") {
    CHECK(direct_eval(g_spec(1, 2, 0, 0, 0, 1), table()) == Rational(1));
    CHECK(direct_eval(g_spec(2, 1, 1, 1, 2, 1), table()) == Rational(7, 24));
    CHECK(direct_eval(v_spec(1, 2, 0, 0, 0, 2), table()) == Rational(1));
    CHECK(direct_eval(r2_spec(3, 1, 1, 0, 1), table()) == Rational(3, 4));
    // V(2,1,1,1,2,1) = 1/6 + (9/4)/12
    CHECK(direct_eval(v_spec(2, 1, 1, 1, 2, 1), table()) == Rational(17, 48));
    SumSpec empty = g_spec(0, 1, 1, 0, 1, 1);
    CHECK(direct_eval(empty, table()) == Rational(0));
}

TEST_CASE("additivity: value at n is value at n-1 plus the n-th summand") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pd(0, 3), md(1, 3), kd(0, 4), shiftd(0, 2);
    std::uniform_int_distribution<std::int64_t> nd(1, 60), rd(0, 3);
    for (int i = 0; i < 400; ++i) {
        SumSpec spec;
        switch (kd(rng)) {
            case 0: spec = g_spec(nd(rng), pd(rng), pd(rng), rd(rng), rd(rng), md(rng)); break;
            case 1: spec = v_spec(nd(rng), pd(rng), pd(rng), rd(rng), rd(rng), md(rng)); break;
            case 2: spec = r2_spec(nd(rng), pd(rng), pd(rng), rd(rng), rd(rng)); break;
            case 3:
                spec = r3_spec(nd(rng), pd(rng), pd(rng), pd(rng), rd(rng), rd(rng), rd(rng));
                break;
            default: spec = mixed_spec(nd(rng), shiftd(rng)); break;
        }
        SumSpec prev = spec;
        prev.n = spec.n - 1;
        CHECK(direct_eval(spec, table()) ==
              direct_eval(prev, table()) + summand(spec, spec.n, table()));
    }
}

TEST_CASE("factor swap symmetry") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> pd(0, 3), md(1, 2);
    std::uniform_int_distribution<std::int64_t> nd(0, 50), rd(0, 4);
    for (int i = 0; i < 300; ++i) {
        int p = pd(rng), q = pd(rng), m = md(rng);
        std::int64_t n = nd(rng), r = rd(rng), s = rd(rng);
        CHECK(direct_eval(g_spec(n, p, q, r, s, m), table()) ==
              direct_eval(g_spec(n, q, p, s, r, m), table()));
        CHECK(direct_eval(v_spec(n, p, q, r, s, m), table()) ==
              direct_eval(v_spec(n, q, p, s, r, m), table()));
        CHECK(direct_eval(r2_spec(n, p, q, r, s), table()) ==
              direct_eval(r2_spec(n, q, p, s, r), table()));
    }
}

TEST_CASE("single-factor power sums telescope to harmonic differences") {
    for (std::int64_t n = 0; n <= 40; ++n)
        for (int p = 1; p <= 3; ++p)
            for (std::int64_t r = 0; r <= 4; ++r)
                CHECK(direct_eval(r2_spec(n, p, 0, r, 0), table()) ==
                      harmonic(n + r, p) - harmonic(r, p));
}

TEST_CASE("theorem domain flag") {
    CHECK(g_spec(5, 1, 0, 0, 0, 1).outside_theorem_domain());
    CHECK(!g_spec(5, 2, 0, 0, 0, 1).outside_theorem_domain());
    CHECK(!v_spec(5, 1, 1, 2, 3, 2).outside_theorem_domain());
    CHECK(!r2_spec(5, 1, 0, 0, 0).outside_theorem_domain());
    SumSpec shifted = g_spec(5, 2, 0, 0, 0, 1);
    shifted.shift = 1;
    CHECK(shifted.outside_theorem_domain());
}

TEST_CASE("capacity errors surface, never silent recompute") {
    HarmonicTable small(5, 2);
    CHECK_THROWS(direct_eval(g_spec(10, 1, 0, 0, 0, 1), small));
    CHECK_THROWS(direct_eval(mixed_spec(4, 2), small));
}

TEST_SUITE_END();
