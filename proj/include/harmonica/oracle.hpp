#pragma once

#include "harmonica/harmonic.hpp"
#include "harmonica/rational.hpp"

#include <cstdint>
#include <string>

namespace harmonica {

enum class SumKind { G, V, R2, R3, Mixed };

std::string to_string(SumKind k);

// Tagged description of one concrete sum:
//   G     sum_{j=1}^{n} H_{j+shift,m}   / D(j)
//   V     sum_{j=1}^{n} H_{j+shift,m}^2 / D(j)
//   R2    sum_{j=1}^{n} 1 / D(j)   (two factors)
//   R3    sum_{j=1}^{n} 1 / D(j)   (three factors)
//   Mixed sum_{j=1}^{n} H_{j+shift,1} H_{j+shift,2} / j,  shift in {0,1,2}
// with D(j) = (j+r)^p (j+s)^q (j+u)^w (j+x)^y.
//
// The plain G/V shape has two shift factors, and the general reduction
// theorems consume exactly that shape; the extra factor pairs (u,w) and
// (x,y) exist because a handful of cataloged sums run over three or four
// distinct shifts, and `shift` lets the numerator carry H_{j+1,m} or
// H_{j+2,m} where an identity is stated that way.
struct SumSpec {
    SumKind kind = SumKind::G;
    std::int64_t n = 0;
    int p = 0, q = 0, w = 0, y = 0;
    std::int64_t r = 0, s = 0, u = 0, x = 0;
    int m = 1;
    int shift = 0;

    // The reduction theorems assume two plain shift factors with p+q > 1;
    // the oracle itself sums anything finite, this only flags specs the
    // theorems do not cover.
    bool outside_theorem_domain() const {
        return (kind == SumKind::G || kind == SumKind::V) &&
               (p + q <= 1 || w != 0 || y != 0 || shift != 0);
    }

    std::string describe() const;
};

SumSpec g_spec(std::int64_t n, int p, int q, std::int64_t r, std::int64_t s, int m);
SumSpec v_spec(std::int64_t n, int p, int q, std::int64_t r, std::int64_t s, int m);
SumSpec r2_spec(std::int64_t n, int p, int q, std::int64_t r, std::int64_t s);
SumSpec r3_spec(std::int64_t n, int p, int q, int w, std::int64_t r, std::int64_t s, std::int64_t u);
SumSpec mixed_spec(std::int64_t n, int shift);

// Literal term-by-term summation, ascending j. Ground truth for everything
// else in the library; deliberately shares no code with the catalog or the
// recursive evaluators.
Rational direct_eval(const SumSpec& spec, const HarmonicTable& table);

// Single summand at index j (used by additivity checks).
Rational summand(const SumSpec& spec, std::int64_t j, const HarmonicTable& table);

} // namespace harmonica
