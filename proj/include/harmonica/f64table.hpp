#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace harmonica {

enum class OpenSumKind;

// Double-precision prefix tables for the benchmark evaluation path:
// harmonic prefixes H_{j,m} and the open sums sum_{i<=j} H^(..)/i^p that
// appear inside closed forms. Built once, O(1) lookups afterwards.
class F64Table {
public:
    explicit F64Table(std::int64_t n_max, int m_max = 6) : n_max_(n_max), m_max_(m_max) {
        h_.resize(m_max);
        for (int m = 1; m <= m_max; ++m) {
            auto& v = h_[m - 1];
            v.resize(static_cast<std::size_t>(n_max + 1));
            v[0] = 0.0;
            double acc = 0.0;
            for (std::int64_t j = 1; j <= n_max; ++j) {
                double t = 1.0;
                for (int e = 0; e < m; ++e) t /= static_cast<double>(j);
                acc += t;
                v[static_cast<std::size_t>(j)] = acc;
            }
        }
    }

    std::int64_t n_max() const { return n_max_; }

    double H(std::int64_t j, int m) const {
        if (j < 0 || j > n_max_ || m < 1 || m > m_max_)
            throw std::out_of_range("F64Table::H out of range");
        return h_[m - 1][static_cast<std::size_t>(j)];
    }

    double open(OpenSumKind k, int p, std::int64_t up) const {
        if (up < 0 || up > n_max_) throw std::out_of_range("F64Table::open out of range");
        const auto& v = open_table(k, p);
        return v[static_cast<std::size_t>(up)];
    }

private:
    const std::vector<double>& open_table(OpenSumKind k, int p) const {
        auto key = std::make_pair(static_cast<int>(k), p);
        auto it = open_.find(key);
        if (it != open_.end()) return it->second;
        std::vector<double> v(static_cast<std::size_t>(n_max_ + 1), 0.0);
        double acc = 0.0;
        for (std::int64_t j = 1; j <= n_max_; ++j) {
            double denom = 1.0;
            for (int e = 0; e < p; ++e) denom *= static_cast<double>(j);
            double numer = 0.0;
            switch (static_cast<int>(k)) {
                case 0: numer = H(j, 1); break;            // H1
                case 1: numer = H(j, 2); break;            // H2
                case 2: numer = H(j, 1) * H(j, 1); break;  // H1Sq
                case 3: numer = H(j, 2) * H(j, 2); break;  // H2Sq
            }
            acc += numer / denom;
            v[static_cast<std::size_t>(j)] = acc;
        }
        return open_.emplace(key, std::move(v)).first->second;
    }

    std::int64_t n_max_;
    int m_max_;
    std::vector<std::vector<double>> h_;
    mutable std::map<std::pair<int, int>, std::vector<double>> open_;
};

} // namespace harmonica
