#pragma once

#include <cstdint>

// The six m-parameterized closed forms: each descends m -> m-1 down to its
// m = 1 initial condition, tracking companion sums where the recursion
// couples them. Written generically over the evaluation context so the same
// code serves the exact evaluators and the double-precision benchmark path.

namespace harmonica {

// sum_{j=1}^{n} 1/((j+r)^p (j+s)^q) reduced to harmonic-number differences
// by repeated partial fractions. Used where a recursion step needs a
// rational building-block sum at an arbitrary shift.
template <class C>
typename C::Num pf_r2(const C& c, std::int64_t n, int p, int q, std::int64_t r, std::int64_t s) {
    if (p == 0 && q == 0) return c.q(n);
    if (q == 0 || p == 0) {
        int e = p + q;
        std::int64_t sh = (q == 0) ? r : s;
        return c.H(n + sh, e) - c.H(sh, e);
    }
    if (r == s) return c.H(n + r, p + q) - c.H(r, p + q);
    typename C::Num acc = c.q(0);
    if (p >= q) {
        // 1/(s-r)^q * sum_i (-1)^i C(q,i) * [1/((j+r)^{p-i} (j+s)^i)]
        long long binom = 1;
        for (int i = 0; i <= q; ++i) {
            auto term = pf_r2(c, n, p - i, i, r, s) * c.q((i % 2 == 0) ? binom : -binom);
            acc = acc + term;
            binom = binom * (q - i) / (i + 1);
        }
        auto pref = c.q(1);
        for (int e = 0; e < q; ++e) pref = pref * c.q(1) / c.q(s - r);
        return acc * pref;
    }
    long long binom = 1;
    for (int i = 0; i <= p; ++i) {
        auto term = pf_r2(c, n, i, q - i, r, s) * c.q((i % 2 == 0) ? binom : -binom);
        acc = acc + term;
        binom = binom * (p - i) / (i + 1);
    }
    auto pref = c.q(1);
    for (int e = 0; e < p; ++e) pref = pref * c.q(1) / c.q(r - s);
    return acc * pref;
}

// sum 1/((j+1)^2 (j+m)): direct two-branch form, no descent needed.
template <class C>
typename C::Num rational_jm(const C& c, std::int64_t n, int m) {
    if (m == 1) return c.H(n + 1, 3) - 1;
    std::int64_t d = m - 1;
    return c.H(n + 1, 2) * c.ip(d, 1) - c.ip(d, 1) - c.H(m, 1) * c.ip(d, 2) + c.ip(d, 2) +
           c.ip(d, 2) * c.tail(n + 2, n + m, 1);
}

// sum H_{j,1}/(j+m)
template <class C>
typename C::Num h1_over_jm(const C& c, std::int64_t n, int m) {
    auto h1 = c.H(n + 1, 1);
    auto g = c.q(1, 2) * (h1 * h1 - c.H(n + 1, 2)); // m = 1
    for (int k = 2; k <= m; ++k) {
        std::int64_t d = k - 1;
        g = g + c.ip(d, 1) * c.tail(n + 2, n + k, 1) - c.H(k, 1) * c.ip(d, 1) +
            c.q(1) / c.q(static_cast<long long>(k) * d) + h1 * c.ip(n + k, 1);
    }
    return g;
}

// sum H_{j,2}/(j+m)
template <class C>
typename C::Num h2_over_jm(const C& c, std::int64_t n, int m) {
    auto h2 = c.H(n + 1, 2);
    auto g = c.H(n + 1, 1) * h2 - c.S1(n + 1, 2); // m = 1
    for (int k = 2; k <= m; ++k) {
        std::int64_t d = k - 1;
        g = g - c.q(1) / c.q(static_cast<long long>(k) * d * d) - h2 * c.ip(d, 1) +
            c.H(k, 1) * c.ip(d, 2) + h2 * c.ip(n + k, 1) - c.ip(d, 2) * c.tail(n + 2, n + k, 1);
    }
    return g;
}

// sum H_{j,1}^2/(j+m); the recursion couples in sum H_{j,1}/(j+k).
template <class C>
typename C::Num h1sq_over_jm(const C& c, std::int64_t n, int m) {
    auto hn = c.H(n, 1);
    auto h1 = c.H(n + 1, 1);
    auto v = c.q(1, 3) * hn * hn * hn - c.S1(n, 2) + c.q(2, 3) * c.H(n, 3) +
             hn * hn * c.ip(n + 1, 1); // m = 1
    auto g = c.q(1, 2) * (h1 * h1 - c.H(n + 1, 2)); // companion: sum H_{j,1}/(j+k), k = 1
    for (int k = 2; k <= m; ++k) {
        std::int64_t d = k - 1;
        v = v + c.q(2) * c.ip(d, 1) * g - h1 * h1 * c.ip(d, 1) +
            c.q(1) / c.q(static_cast<long long>(k) * d * d) - c.H(k, 1) * c.ip(d, 2) +
            c.ip(d, 2) * c.tail(n + 2, n + k, 1) + h1 * h1 * c.ip(n + k, 1) +
            c.q(2) * h1 * c.ip(d, 1) * c.ip(n + k, 1);
        g = g + c.ip(d, 1) * c.tail(n + 2, n + k, 1) - c.H(k, 1) * c.ip(d, 1) +
            c.q(1) / c.q(static_cast<long long>(k) * d) + h1 * c.ip(n + k, 1);
    }
    return v;
}

// sum H_{j,1}^2/(j+m)^2; couples in both sum H_{j,1}/(j+k) and
// sum H_{j,1}/(j+k)^2 (the latter via partial fractions onto open sums).
template <class C>
typename C::Num h1sq_over_jm_sq(const C& c, std::int64_t n, int m) {
    auto hn = c.H(n, 1);
    auto v = c.S1sq(n, 2) - c.q(2) * c.S1(n, 3) + c.H(n, 4) + hn * hn * c.ip(n + 1, 2); // m = 1
    for (int k = 2; k <= m; ++k) {
        std::int64_t d = k - 1;
        // G_{n,1,0}^{d,0,1} and G_{n,2,0}^{d,0,1}
        auto g1 = h1_over_jm(c, n, static_cast<int>(d));
        auto g2 = c.S1(n + d, 2) - c.S1(d, 2);
        for (std::int64_t i = 1; i <= d; ++i) g2 = g2 - pf_r2(c, n, 1, 2, i, d);
        v = v + c.q(2) * c.ip(d, 1) * g2 + c.q(2) * c.ip(d, 2) * g1 - hn * hn * c.ip(d, 2) +
            c.H(n, 2) * c.ip(d, 2) - c.H(d, 2) * c.ip(d, 2) - c.q(2) * c.H(d, 1) * c.ip(d, 3) +
            hn * hn * c.ip(n + k, 2) + c.q(2) * c.ip(d, 3) * c.tail(n + 1, n + d, 1) +
            c.ip(d, 2) * c.tail(n + 1, n + d, 2);
    }
    return v;
}

// sum H_{j,2}^2/(j+m)^2; couples in sum H_{j,2}/(j+k) and
// sum H_{j,2}/(j+k)^2.
template <class C>
typename C::Num h2sq_over_jm_sq(const C& c, std::int64_t n, int m) {
    auto hn2 = c.H(n, 2);
    auto v = c.q(1, 3) * hn2 * hn2 * hn2 + c.q(2, 3) * c.H(n, 6) - c.S2(n, 4) +
             hn2 * hn2 * c.ip(n + 1, 2); // m = 1
    for (int k = 2; k <= m; ++k) {
        std::int64_t d = k - 1;
        auto g1 = h2_over_jm(c, n, static_cast<int>(d)); // sum H_{j,2}/(j+d)
        auto g2 = c.S2(n + d, 2) - c.S2(d, 2);           // sum H_{j,2}/(j+d)^2
        for (std::int64_t i = 1; i <= d; ++i) g2 = g2 - pf_r2(c, n, 2, 2, i, d);
        v = v - c.q(2) * c.ip(d, 2) * g2 - c.q(4) * c.ip(d, 3) * g1 +
            c.q(4) * c.H(n, 1) * hn2 * c.ip(d, 3) - hn2 * hn2 * c.ip(d, 2) +
            c.q(4) * hn2 * c.ip(d, 4) + c.q(2) * c.H(n, 3) * c.ip(d, 3) -
            c.q(4) * c.ip(d, 3) * c.S1(n, 2) - c.q(4) * c.H(d, 1) * c.ip(d, 5) -
            c.H(d, 2) * c.ip(d, 4) + c.q(4) * c.ip(d, 5) * c.tail(n + 1, n + d, 1) +
            c.ip(d, 4) * c.tail(n + 1, n + d, 2) + hn2 * hn2 * c.ip(n + k, 2);
    }
    return v;
}

// sum H_{j,2}^2/(j+m); couples in sum H_{j,2}/(j+k).
template <class C>
typename C::Num h2sq_over_jm(const C& c, std::int64_t n, int m) {
    auto hn2 = c.H(n, 2);
    auto v = c.S2sq(n + 1, 1) - c.q(2) * c.S2(n + 1, 3) + c.H(n + 1, 5); // m = 1
    for (int k = 2; k <= m; ++k) {
        std::int64_t d = k - 1;
        auto g2 = h2_over_jm(c, n, static_cast<int>(d));
        v = v - c.q(2) * c.ip(d, 2) * g2 - hn2 * hn2 * c.ip(d, 1) +
            c.q(2) * c.H(n, 1) * hn2 * c.ip(d, 2) + hn2 * c.ip(d, 3) + c.H(n, 3) * c.ip(d, 2) -
            c.q(2) * c.ip(d, 2) * c.S1(n, 2) - c.H(d, 1) * c.ip(d, 4) + hn2 * hn2 * c.ip(n + k, 1) +
            c.ip(d, 4) * c.tail(n + 1, n + d, 1);
    }
    return v;
}

} // namespace harmonica
