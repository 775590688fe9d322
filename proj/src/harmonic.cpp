#include "harmonica/harmonic.hpp"

#include "harmonica/errors.hpp"

#include <atomic>
#include <stdexcept>
#include <string>

namespace harmonica {

namespace {
std::atomic<std::uint64_t> g_table_serial{1};
}

Rational harmonic(std::int64_t n, int m) {
    if (m <= 0) throw std::invalid_argument("harmonic: order m must be positive");
    if (n < 0) throw std::invalid_argument("harmonic: n must be nonnegative");
    Rational acc = 0;
    for (std::int64_t i = 1; i <= n; ++i) acc += inv_pow(i, m);
    return acc;
}

Rational tail_sum(std::int64_t n, std::int64_t a, std::int64_t b, int m) {
    if (m <= 0) throw std::invalid_argument("tail_sum: order m must be positive");
    Rational acc = 0;
    for (std::int64_t j = n + a; j <= n + b; ++j) acc += inv_pow(j, m);
    return acc;
}

HarmonicTable::HarmonicTable(std::int64_t n_max, int m_max)
    : n_max_(n_max), m_max_(m_max), serial_(g_table_serial.fetch_add(1)) {
    if (n_max < 0) throw std::invalid_argument("HarmonicTable: n_max must be nonnegative");
    if (m_max < 1) throw std::invalid_argument("HarmonicTable: m_max must be positive");
    values_.resize(static_cast<std::size_t>(n_max + 1) * m_max);
    for (int m = 1; m <= m_max_; ++m) {
        Rational acc = 0;
        values_[m - 1] = acc; // H_{0,m} = 0
        for (std::int64_t j = 1; j <= n_max_; ++j) {
            acc += inv_pow(j, m);
            values_[static_cast<std::size_t>(j) * m_max_ + (m - 1)] = acc;
        }
    }
}

const Rational& HarmonicTable::at(std::int64_t j, int m) const {
    if (j < 0 || j > n_max_ || m < 1 || m > m_max_)
        throw capacity_error("HarmonicTable: H_{" + std::to_string(j) + "," + std::to_string(m) +
                             "} outside table (n_max=" + std::to_string(n_max_) +
                             ", m_max=" + std::to_string(m_max_) + ")");
    return values_[static_cast<std::size_t>(j) * m_max_ + (m - 1)];
}

} // namespace harmonica
