#include "harmonica/errors.hpp"
#include "harmonica/limits.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace harmonica;

TEST_SUITE_BEGIN("limits");

namespace {

// |x - reference| < tol, with the reference given as a decimal literal
bool close_to(const Rational& x, double reference, double tol) {
    Rational diff = x - Rational(static_cast<long long>(reference * 1e15), 1000000000000000LL);
    return abs(diff) < Rational(static_cast<long long>(tol * 1e15) + 1, 1000000000000000LL);
}

} // namespace

TEST_CASE("constants match their published leading digits") {
    // pi = 3.14159265358979323846..., zeta(3) = 1.20205690315959428540...,
    // zeta(5) = 1.03692775514336992633...
    Rational pi2 = basis_value(BasisConstant::Pi2, 128);
    CHECK(close_to(pi2, 9.869604401089358, 1e-12));
    Rational z3 = basis_value(BasisConstant::Zeta3, 128);
    CHECK(close_to(z3, 1.2020569031595943, 1e-12));
    Rational z5 = basis_value(BasisConstant::Zeta5, 128);
    CHECK(close_to(z5, 1.0369277551433699, 1e-12));
    CHECK(close_to(basis_value(BasisConstant::Pi4, 128), 97.40909103400243, 1e-11));
    CHECK(close_to(basis_value(BasisConstant::Pi6, 128), 961.3891935753043, 1e-10));
    CHECK(close_to(basis_value(BasisConstant::Zeta3Sq, 128), 1.4449407984336342, 1e-12));
    CHECK(close_to(basis_value(BasisConstant::Pi2Zeta3, 128), 11.863826101783777, 1e-11));
    CHECK_THROWS_AS(basis_value(BasisConstant::Pi2, 32), domain_error);
}

TEST_CASE("independent route: zeta(3) via Apery's series") {
    // zeta(3) = (5/2) sum (-1)^(k-1) / (k^3 binom(2k,k)), frozen at 60 terms
    Rational acc = 0;
    Int binom = 2; // binom(2,1)
    for (int k = 1; k <= 60; ++k) {
        Rational term = Rational(1, ipow(Int(k), 3) * binom);
        acc += (k % 2 == 1) ? term : -term;
        // binom(2(k+1), k+1) = binom(2k,k) * 2(2k+1)/(k+1)
        binom = binom * 2 * (2 * k + 1) / (k + 1);
    }
    Rational apery = Rational(5, 2) * acc;
    Rational borwein = basis_value(BasisConstant::Zeta3, 128);
    CHECK(abs(apery - borwein) < Rational(1, Int(1) << 100));
}

TEST_CASE("precision doubling changes the value below the coarse error bound") {
    for (BasisConstant b : {BasisConstant::Pi2, BasisConstant::Zeta3, BasisConstant::Zeta5,
                            BasisConstant::Pi6, BasisConstant::Pi2Zeta3}) {
        Rational coarse = basis_value(b, 128);
        Rational fine = basis_value(b, 256);
        CHECK(abs(coarse - fine) < Rational(1, Int(1) << (128 - 8)));
    }
}

TEST_CASE("eval_limit examples") {
    CHECK(eval_limit(LimitExpr().one(1), 128) == Rational(1));
    // Lemma-style spot values, three decimals
    CHECK(eval_limit_decimal(LimitExpr().pi4(1, 120).pi2(-1, 6).one(1), 256, 3) == "0.167");
    CHECK(eval_limit_decimal(LimitExpr().zeta3sq(1).pi6(19, 22680), 256, 3) == "2.250");
    CHECK(eval_limit_decimal(LimitExpr().pi2(1, 6).one(1), 256, 3) == "2.645");
}

TEST_CASE("linearity of eval_limit") {
    LimitExpr a = LimitExpr().pi2(1, 6).zeta3(2);
    LimitExpr b = LimitExpr().pi2(-1, 6).one(3);
    LimitExpr sum = LimitExpr().zeta3(2).one(3); // a + b
    CHECK(eval_limit(sum, 192) == eval_limit(a, 192) + eval_limit(b, 192));
}

TEST_CASE("zeta(6) identity: the two printed forms of the fifth limit agree") {
    // zeta^2(3) - 4 pi^6/2835 + zeta(6) == zeta(3)^2 - pi^6/2835, zeta(6) = pi^6/945
    int bits = 256;
    Rational lhs = eval_limit(LimitExpr().zeta3sq(1).pi6(-4, 2835), bits) +
                   basis_value(BasisConstant::Pi6, bits) / 945;
    Rational rhs = eval_limit(LimitExpr().zeta3sq(1).pi6(-1, 2835), bits);
    CHECK(abs(lhs - rhs) < Rational(1, Int(1) << 200));
}

TEST_CASE("fixed-point truncation path agrees with the exact oracle at N=1000") {
    HarmonicTable table(1000, 2);
    for (int row = 0; row < 5; ++row) {
        Rational exact = known_sum_exact(row, 1000, table);
        Rational fixed = known_sum_fixed(row, 1000, 192);
        CHECK(abs(exact - fixed) < Rational(1, Int(1) << 150));
    }
}

TEST_CASE("known-limit table at a desk-scale N") {
    auto rows = known_limit_table(2000, 192);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CAPTURE(row.name);
        CHECK(row.pass);
    }
}

TEST_CASE("convergence checking") {
    ConvergenceReport r = check_convergence("lemSum0", 1000, 128);
    CHECK(r.pass);
    CHECK(r.monotone);
    // final gap exactly 1/1001
    CHECK(r.points.back().gap == Rational(1, 1001));

    CHECK_THROWS_AS(check_convergence("lemSumHj1", 100, 128), domain_error); // divergent
}

TEST_CASE("representative tail sizes at N = 1000") {
    HarmonicTable table(1020, 6);
    // tail of sum H_{j,2}/((j+1)^2(j+2)) stays under 10/N
    ConvergenceReport a = check_convergence("lemSumHi2i1sqi2", 1000, 128, {}, &table);
    CHECK(a.pass);
    CHECK(a.points.back().gap <= Rational(10, 1000));
    // tail of sum H_{j,1}^2/((j+1)(j+2)) stays under (ln N + 2)^2 / N
    ConvergenceReport b = check_convergence("lemSumHisqi1i2", 1000, 128, {}, &table);
    CHECK(b.pass);
    Rational ln_n_plus_2(89, 10); // ln(1000) + 2 < 8.9
    CHECK(b.points.back().gap <= ln_n_plus_2 * ln_n_plus_2 / 1000);
}

TEST_CASE("default precision env override") {
    CHECK(default_precision_bits() >= 64);
}

// Independent cross-check of every transcribed limit: sum the original
// summand directly in double precision to N = 4e6 in one shared pass and
// compare against the stated limit. Catches limit transcription slips far
// below the exact checks' gap-bound resolution.
TEST_CASE("limits cross-checked by direct float summation at N = 4e6") {
    constexpr std::int64_t big_n = 4000000;
    struct Row {
        const FormulaEntry* entry;
        SumSpec spec;
        double limit;
        double bound;
        double sum = 0.0;
    };
    std::vector<Row> rows;
    for (const FormulaEntry* e : Catalog::instance().list()) {
        if (!e->convergent() || !e->gap) continue;
        std::vector<EvalArgs> params;
        switch (e->params.kind) {
            case ParamDomain::Kind::None: params.push_back({}); break;
            case ParamDomain::Kind::M:
                for (int m = e->params.m_min; m <= std::min(e->params.m_min + 2, 8); ++m)
                    params.push_back(EvalArgs{0, m, 0});
                break;
            case ParamDomain::Kind::MR:
                params.push_back(EvalArgs{0, 0, 2});
                params.push_back(EvalArgs{0, 1, 3});
                break;
        }
        for (EvalArgs args : params) {
            args.n = big_n;
            Row row;
            row.entry = e;
            row.spec = e->spec(args);
            row.limit = static_cast<double>(eval_limit(e->limit_for(args), 128));
            // x2 slack on the declared bound plus room for float rounding
            row.bound =
                2.0 * static_cast<double>(gap_bound_value(*e->gap, big_n)) + 1e-8;
            rows.push_back(row);
        }
    }
    REQUIRE(rows.size() >= 80);

    // one pass over j with running harmonic values H_{j+s,m}, s = 0..2
    double h[3][7] = {};
    for (int s = 0; s < 3; ++s)
        for (int m = 1; m <= 6; ++m)
            for (std::int64_t i = 1; i <= s; ++i) h[s][m] += std::pow(double(i), -m);
    for (std::int64_t j = 1; j <= big_n; ++j) {
        for (int s = 0; s < 3; ++s) {
            double base = 1.0 / static_cast<double>(j + s);
            double pw = base;
            for (int m = 1; m <= 6; ++m, pw *= base) h[s][m] += pw;
        }
        for (Row& row : rows) {
            const SumSpec& sp = row.spec;
            double numer;
            switch (sp.kind) {
                case SumKind::G: numer = h[sp.shift][sp.m]; break;
                case SumKind::V: {
                    double v = h[sp.shift][sp.m];
                    numer = v * v;
                    break;
                }
                case SumKind::Mixed: numer = h[sp.shift][1] * h[sp.shift][2]; break;
                default: numer = 1.0; break;
            }
            double denom = sp.kind == SumKind::Mixed ? static_cast<double>(j) : 1.0;
            if (sp.kind != SumKind::Mixed) {
                for (int e = 0; e < sp.p; ++e) denom *= static_cast<double>(j + sp.r);
                for (int e = 0; e < sp.q; ++e) denom *= static_cast<double>(j + sp.s);
                for (int e = 0; e < sp.w; ++e) denom *= static_cast<double>(j + sp.u);
                for (int e = 0; e < sp.y; ++e) denom *= static_cast<double>(j + sp.x);
            }
            row.sum += numer / denom;
        }
    }
    for (const Row& row : rows) {
        CAPTURE(row.entry->id);
        CAPTURE(row.spec.describe());
        CHECK(std::abs(row.sum - row.limit) <= row.bound);
    }
}

TEST_SUITE_END();
