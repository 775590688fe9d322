#pragma once

#include "harmonica/rational.hpp"

#include <cstdint>
#include <vector>

namespace harmonica {

// H_{n,m} = sum_{i=1}^{n} i^{-m}, computed exactly. harmonic(0, m) = 0.
// m = 0 is rejected.
Rational harmonic(std::int64_t n, int m);

// sum_{j=n+a}^{n+b} 1/j^m, empty (zero) when b < a.
Rational tail_sum(std::int64_t n, std::int64_t a, std::int64_t b, int m);

// Dense memoized table of H_{j,m} for 0 <= j <= n_max, 1 <= m <= m_max.
// Built once, read-only afterwards; lookups past the bounds throw
// capacity_error instead of recomputing.
class HarmonicTable {
public:
    explicit HarmonicTable(std::int64_t n_max, int m_max = kDefaultMMax);

    const Rational& at(std::int64_t j, int m) const;

    std::int64_t n_max() const { return n_max_; }
    int m_max() const { return m_max_; }

    // Distinct per table instance; memoization keys elsewhere use it to tell
    // tables apart.
    std::uint64_t serial() const { return serial_; }

    // Largest order appearing in any catalog formula (H_{n,6}).
    static constexpr int kDefaultMMax = 6;

private:
    std::int64_t n_max_;
    int m_max_;
    std::uint64_t serial_;
    std::vector<Rational> values_; // values_[j * m_max_ + (m-1)]
};

} // namespace harmonica
