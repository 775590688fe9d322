#pragma once

#include "harmonica/rational.hpp"

#include <map>
#include <string>

namespace harmonica {

// Constant basis every finite limit in the catalog lives over.
enum class BasisConstant { One, Pi2, Pi4, Pi6, Zeta3, Zeta5, Zeta3Sq, Pi2Zeta3 };

std::string to_string(BasisConstant b);

// Exact rational coefficient vector over the constant basis. Zero
// coefficients are never stored.
class LimitExpr {
public:
    LimitExpr() = default;

    LimitExpr& set(BasisConstant b, const Rational& c) {
        if (c == 0)
            coeff_.erase(b);
        else
            coeff_[b] = c;
        return *this;
    }

    // chainable per-basis setters, coefficient a/b
    LimitExpr& one(long long a, long long b = 1) { return set(BasisConstant::One, Rational(a, b)); }
    LimitExpr& pi2(long long a, long long b = 1) { return set(BasisConstant::Pi2, Rational(a, b)); }
    LimitExpr& pi4(long long a, long long b = 1) { return set(BasisConstant::Pi4, Rational(a, b)); }
    LimitExpr& pi6(long long a, long long b = 1) { return set(BasisConstant::Pi6, Rational(a, b)); }
    LimitExpr& zeta3(long long a, long long b = 1) { return set(BasisConstant::Zeta3, Rational(a, b)); }
    LimitExpr& zeta5(long long a, long long b = 1) { return set(BasisConstant::Zeta5, Rational(a, b)); }
    LimitExpr& zeta3sq(long long a, long long b = 1) { return set(BasisConstant::Zeta3Sq, Rational(a, b)); }
    LimitExpr& pi2zeta3(long long a, long long b = 1) { return set(BasisConstant::Pi2Zeta3, Rational(a, b)); }

    LimitExpr& one_r(const Rational& c) { return set(BasisConstant::One, c); }
    LimitExpr& pi2_r(const Rational& c) { return set(BasisConstant::Pi2, c); }

    const std::map<BasisConstant, Rational>& coefficients() const { return coeff_; }

    bool operator==(const LimitExpr& other) const { return coeff_ == other.coeff_; }

    std::string describe() const;

private:
    std::map<BasisConstant, Rational> coeff_;
};

// Leading asymptotic term of a divergent sum, metadata only.
struct GrowthClass {
    std::string description;
};

} // namespace harmonica
