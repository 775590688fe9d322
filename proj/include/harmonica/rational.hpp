#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace harmonica {

// GMP-backed integers and rationals. The sweeps reduce fractions whose
// components run to tens of thousands of digits, which needs GMP's
// subquadratic gcd. Expression templates are switched off so that
// `auto x = a + b` always yields a value; the catalog formulas rely on that.
using Int =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

// Exact fraction, always stored reduced (canonicalized) with positive
// denominator, which is exactly the invariant we want, so we use it directly
// rather than wrapping it.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

// k^e as a big integer, e >= 0.
inline Int ipow(Int base, int e) {
    Int acc = 1;
    while (e-- > 0) acc *= base;
    return acc;
}

// 1 / k^e as a rational, k != 0, e >= 0.
inline Rational inv_pow(std::int64_t k, int e) {
    return Rational(1, ipow(Int(k), e));
}

// "num/den", or just "num" when the value is integral.
std::string to_fraction_string(const Rational& r);

// Fixed-point decimal rendering with `digits` digits after the point,
// rounded to nearest (ties away from zero).
std::string to_decimal_string(const Rational& r, int digits);

// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

} // namespace harmonica
