#include "harmonica/catalog.hpp"
#include "harmonica/errors.hpp"
#include "harmonica/verify.hpp"

#include <doctest.h>

using namespace harmonica;

TEST_SUITE_BEGIN("catalog");

namespace {
const HarmonicTable& table() {
    static HarmonicTable t(80, 6);
    return t;
}
} // namespace

TEST_CASE("registry basics") {
    const Catalog& cat = Catalog::instance();
    CHECK(cat.entries().size() >= 80);
    CHECK(cat.list(Family::Mixed).size() == 3);
    auto rational = cat.list(Family::Rational);
    auto has = [&](const char* id) {
        for (const auto* e : rational)
            if (e->id == id) return true;
        return false;
    };
    CHECK(has("lemSum0"));
    CHECK(has("lemSum1"));
    CHECK(has("lemSumj1j2j3j4"));
    CHECK_THROWS_AS(cat.entry("lemNoSuchThing"), unknown_formula_error);

    // deterministic id order
    auto all = cat.list();
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1]->id < all[i]->id);

    // duplicate *app labels resolve to the same entry
    CHECK(&cat.entry("lemSumj1sqjmapp") == &cat.entry("lemSumj1sqjm"));
}

TEST_CASE("closed form examples") {
    CHECK(closed_form("lemSum0", EvalArgs{3, 0, 0}, table()) == Rational(3, 4));
    // both sides of the j^2 square identity at n=1 equal H_{1,2}^2
    CHECK(closed_form("lemSumHi2sqisq", EvalArgs{1, 0, 0}, table()) == Rational(1));
    // oracle brute force: 1/6 + (3/2)/12
    CHECK(closed_form("lemSumHii1i2", EvalArgs{2, 0, 0}, table()) == Rational(7, 24));
    // oracle 1 + (3/2)/2; also (1/2)((3/2)^2 + 5/4)
    CHECK(closed_form("lemSumHii1", EvalArgs{2, 0, 0}, table()) == Rational(7, 4));
    CHECK(closed_form("lemSumjmjr", EvalArgs{5, 2, 3}, table()) ==
          direct_eval(r2_spec(5, 1, 1, 2, 3), table()));
}

TEST_CASE("limit_of examples") {
    LimitResult a = limit_of("lemSumHi2i1sqi2");
    CHECK(a.kind == LimitKind::Convergent);
    CHECK(a.expr == LimitExpr().pi4(1, 120).pi2(-1, 6).one(1));

    LimitResult b = limit_of("lemSumHj1");
    CHECK(b.kind == LimitKind::Divergent);
    CHECK(b.growth.description == "n ln n");

    LimitResult c = limit_of("lemSumHi2sqisq");
    CHECK(c.kind == LimitKind::Convergent);
    CHECK(c.expr == LimitExpr().zeta3sq(1).pi6(19, 22680));

    // parameterized: m >= 2 branch carries H_{m,1} in the rational part
    LimitResult d = limit_of("lemSumj1sqjm", EvalArgs{0, 3, 0});
    CHECK(d.kind == LimitKind::ConvergentParam);
    Rational ones = Rational(-1, 2) - harmonic(3, 1) / 4 + Rational(1, 4);
    CHECK(d.expr == LimitExpr().one_r(ones).pi2(1, 12));

    LimitResult e = limit_of("lemSumHj1sqjmsq", EvalArgs{0, 4, 0});
    CHECK(e.kind == LimitKind::Unstated);

    CHECK_THROWS_AS(limit_of("lemNoSuchThing"), unknown_formula_error);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(closed_form("lemSumjmjr", EvalArgs{5, 3, 2}, table()), domain_error);
    CHECK_THROWS_AS(closed_form("lemSumj2jm", EvalArgs{5, 0, 0}, table()), domain_error);
}

// The defining contract, quantified: closed_form == direct_eval for every
// registered entry over a medium sweep (the acceptance suite runs the full
// n <= 100 version).
TEST_CASE("catalog contract sweep") {
    HarmonicTable sweep_table(60, 6);
    for (const FormulaEntry* e : Catalog::instance().list()) {
        CheckRow row = check_catalog_entry(*e, 40, 8, sweep_table);
        INFO(row.id, " first failure at n=", row.fail_n, " m=", row.fail_m, " r=", row.fail_r,
             " lhs=", row.lhs, " rhs=", row.rhs);
        CHECK(row.pass);
    }
}

TEST_CASE("negative control: corrupted entry is caught and pinpointed") {
    HarmonicTable sweep_table(30, 6);
    const FormulaEntry& e = Catalog::instance().entry("lemSum0");
    CheckRow row = check_catalog_entry(e, 20, 8, sweep_table, /*corrupt=*/true);
    CHECK(!row.pass);
    CHECK(row.fail_n == e.n_min);
    CHECK(row.id == "lemSum0");
    CHECK(!row.lhs.empty());
}

TEST_SUITE_END();
