#pragma once

#include "harmonica/harmonic.hpp"
#include "harmonica/oracle.hpp"
#include "harmonica/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace harmonica {

class Catalog; // catalog.hpp; base resolution under CatalogFirst

enum class BasePolicy { CatalogFirst, OracleOnly };

enum class ReductionRule {
    QZero,
    PartialFractionPGtQ,
    PartialFractionPLtQ,
    SwapNormalize,
    MergeEqualShifts,
    BaseCatalog,
    BaseOracle,
};

std::string to_string(ReductionRule r);

// One node of a reduction tree. `coefficient` is the rational weight this
// node's value enters its parent's combination with (prefactors are folded
// into the children's coefficients), so for every internal node
//   value == sum over children of (child.coefficient * child.value).
struct TraceNode {
    SumSpec spec;
    ReductionRule rule = ReductionRule::BaseOracle;
    Rational coefficient = 1;
    std::vector<std::size_t> children;
    Rational value = 0;
    std::string base; // leaves: "oracle" or "catalog:<formula id>"
};

struct ReductionTrace {
    std::vector<TraceNode> nodes;
    std::size_t root = 0;

    const Rational& value() const { return nodes[root].value; }
    // Recombines leaf values bottom-up, ignoring stored internal values.
    Rational replay() const;
};

// General recursive evaluation of G_{n,p,q}^{r,s,m} / V_{n,p,q}^{r,s,m}
// (two plain shift factors, p+q > 1). Exact; equals direct_eval.
std::pair<Rational, ReductionTrace> eval_G(const SumSpec& spec, const HarmonicTable& table,
                                           BasePolicy policy);
std::pair<Rational, ReductionTrace> eval_V(const SumSpec& spec, const HarmonicTable& table,
                                           BasePolicy policy);

// The six m-shift recursions, descending to their m = 1 initial conditions.
enum class ShiftFamily {
    RationalJm,   // sum 1/((j+1)^2 (j+m))
    H1OverJm,     // sum H_{j,1}/(j+m)
    H2OverJm,     // sum H_{j,2}/(j+m)
    H1SqOverJm,   // sum H_{j,1}^2/(j+m)
    H1SqOverJmSq, // sum H_{j,1}^2/(j+m)^2
    H2SqOverJm,   // sum H_{j,2}^2/(j+m)
};

std::string to_string(ShiftFamily f);

Rational eval_shift_recursion(ShiftFamily family, std::int64_t n, int m,
                              const HarmonicTable& table);

// Oracle spec matching a shift family instance.
SumSpec shift_family_spec(ShiftFamily family, std::int64_t n, int m);

} // namespace harmonica
