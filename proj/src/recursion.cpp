#include "harmonica/recursion.hpp"

#include "harmonica/catalog.hpp"
#include "harmonica/errors.hpp"
#include "harmonica/shift_forms.hpp"

#include <optional>

namespace harmonica {

std::string to_string(ReductionRule r) {
    switch (r) {
        case ReductionRule::QZero: return "Q_ZERO";
        case ReductionRule::PartialFractionPGtQ: return "PARTIAL_FRACTION_PGTQ";
        case ReductionRule::PartialFractionPLtQ: return "PARTIAL_FRACTION_PLTQ";
        case ReductionRule::SwapNormalize: return "SWAP_NORMALIZE";
        case ReductionRule::MergeEqualShifts: return "MERGE_EQUAL_SHIFTS";
        case ReductionRule::BaseCatalog: return "BASE_CATALOG";
        case ReductionRule::BaseOracle: return "BASE_ORACLE";
    }
    return "?";
}

std::string to_string(ShiftFamily f) {
    switch (f) {
        case ShiftFamily::RationalJm: return "RATIONAL_JM";
        case ShiftFamily::H1OverJm: return "H1_OVER_JM";
        case ShiftFamily::H2OverJm: return "H2_OVER_JM";
        case ShiftFamily::H1SqOverJm: return "H1SQ_OVER_JM";
        case ShiftFamily::H1SqOverJmSq: return "H1SQ_OVER_JM_SQ";
        case ShiftFamily::H2SqOverJm: return "H2SQ_OVER_JM";
    }
    return "?";
}

Rational ReductionTrace::replay() const {
    std::vector<Rational> vals(nodes.size());
    // children always carry larger indices than their parent, so walk
    // backwards for a bottom-up pass
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const TraceNode& node = nodes[i];
        if (node.children.empty()) {
            vals[i] = node.value;
        } else {
            Rational acc = 0;
            for (std::size_t ch : node.children) acc += nodes[ch].coefficient * vals[ch];
            vals[i] = acc;
        }
    }
    return vals[root];
}

namespace {

// Closed forms registered for the q = 0, r = 0 base sums.
std::optional<std::string> base_formula_id(const SumSpec& spec) {
    if (spec.kind == SumKind::G) {
        if (spec.p == 0 && spec.m == 1) return "lemSumHj1";
        if (spec.p == 0 && spec.m == 2) return "lemSumHi2";
        if (spec.p == 1 && spec.m == 1) return "lemSumHii1";
        if (spec.p == 1 && spec.m == 2) return "lemSumHi2i";
        if (spec.p == 1 && spec.m == 3) return "lemSumHi3i";
        if (spec.p == 2 && spec.m == 2) return "lemSumHi2isq";
    } else if (spec.kind == SumKind::V) {
        if (spec.p == 0 && spec.m == 1) return "lemSumHj1sq";
        if (spec.p == 1 && spec.m == 1) return "lemSumHj1sqj";
        if (spec.p == 2 && spec.m == 2) return "lemSumHi2sqisq";
    }
    return std::nullopt;
}

class Reducer {
public:
    Reducer(const HarmonicTable& table, BasePolicy policy) : table_(table), policy_(policy) {}

    std::size_t build(SumSpec spec, const Rational& coefficient, int budget) {
        if (budget < 0)
            throw std::logic_error("reduction depth bound exceeded for " + spec.describe());
        std::size_t idx = nodes_.size();
        nodes_.push_back(TraceNode{spec, ReductionRule::BaseOracle, coefficient, {}, 0, ""});

        if (spec.kind == SumKind::R2 || spec.kind == SumKind::R3) {
            leaf(idx, ReductionRule::BaseOracle);
            return idx;
        }

        // equal shifts merge into a single factor
        if (spec.q > 0 && spec.r == spec.s) {
            SumSpec merged = spec;
            merged.p = spec.p + spec.q;
            merged.q = 0;
            merged.s = 0;
            attach(idx, ReductionRule::MergeEqualShifts,
                   {build(merged, 1, budget - 1)});
            return idx;
        }

        // p = 0 with q > 0: swap the two factors
        if (spec.p == 0 && spec.q > 0) {
            SumSpec swapped = spec;
            std::swap(swapped.p, swapped.q);
            std::swap(swapped.r, swapped.s);
            attach(idx, ReductionRule::SwapNormalize, {build(swapped, 1, budget - 1)});
            return idx;
        }

        if (spec.q == 0) {
            if (spec.r == 0) {
                leaf(idx, base_rule(spec));
                return idx;
            }
            // shift the summation index: H_{j,m}/(j+r)^p in terms of
            // full-range base sums and rational correction sums
            std::vector<std::size_t> children;
            SumSpec head = spec;
            head.n = spec.n + spec.r;
            head.r = 0;
            head.s = 0;
            children.push_back(build(head, 1, budget - 1));
            SumSpec cut = spec;
            cut.n = spec.r;
            cut.r = 0;
            cut.s = 0;
            children.push_back(build(cut, -1, budget - 1));
            if (spec.kind == SumKind::G) {
                for (std::int64_t i = 1; i <= spec.r; ++i)
                    children.push_back(
                        build(r2_spec(spec.n, spec.m, spec.p, i, spec.r), -1, budget - 1));
            } else {
                for (std::int64_t i = 1; i <= spec.r; ++i) {
                    SumSpec cross = g_spec(spec.n, spec.p, spec.m, spec.r, i, spec.m);
                    children.push_back(build(cross, -2, spec.p + spec.m + spec.r + 2));
                }
                for (std::int64_t i = 1; i <= spec.r; ++i)
                    children.push_back(
                        build(r2_spec(spec.n, spec.p, 2 * spec.m, spec.r, i), 1, budget - 1));
                for (std::int64_t i = 1; i <= spec.r; ++i)
                    for (std::int64_t k = 1; k <= spec.r; ++k)
                        children.push_back(build(
                            r3_spec(spec.n, spec.p, spec.m, spec.m, spec.r, i, k), -2,
                            budget - 1));
                for (std::int64_t i1 = 1; i1 <= spec.r; ++i1)
                    for (std::int64_t i2 = i1 + 1; i2 <= spec.r; ++i2)
                        children.push_back(build(
                            r3_spec(spec.n, spec.p, spec.m, spec.m, spec.r, i1, i2), 2,
                            budget - 1));
            }
            attach(idx, ReductionRule::QZero, std::move(children));
            return idx;
        }

        // binomial partial fractions; p = q routes through the p >= q branch
        std::vector<std::size_t> children;
        if (spec.p >= spec.q) {
            Rational pref = inv_pow(spec.s - spec.r, spec.q); // (s-r) may be negative; q even/odd handled by ipow
            Int binom = 1;
            for (int i = 0; i <= spec.q; ++i) {
                SumSpec term = spec;
                term.p = spec.p - i;
                term.q = i;
                Rational coeff = pref * Rational(binom);
                if (i % 2 == 1) coeff = -coeff;
                children.push_back(build(term, coeff, budget - 1));
                binom = binom * (spec.q - i) / (i + 1);
            }
            attach(idx, ReductionRule::PartialFractionPGtQ, std::move(children));
        } else {
            // symmetric branch; the prefactor is 1/(r-s)^p
            Rational pref = inv_pow(spec.r - spec.s, spec.p);
            Int binom = 1;
            for (int i = 0; i <= spec.p; ++i) {
                SumSpec term = spec;
                term.p = i;
                term.q = spec.q - i;
                Rational coeff = pref * Rational(binom);
                if (i % 2 == 1) coeff = -coeff;
                children.push_back(build(term, coeff, budget - 1));
                binom = binom * (spec.p - i) / (i + 1);
            }
            attach(idx, ReductionRule::PartialFractionPLtQ, std::move(children));
        }
        return idx;
    }

    ReductionTrace finish(std::size_t root) {
        ReductionTrace trace;
        trace.nodes = std::move(nodes_);
        trace.root = root;
        return trace;
    }

private:
    ReductionRule base_rule(const SumSpec& spec) {
        if (policy_ == BasePolicy::CatalogFirst && base_formula_id(spec))
            return ReductionRule::BaseCatalog;
        return ReductionRule::BaseOracle;
    }

    void leaf(std::size_t idx, ReductionRule rule) {
        TraceNode& node = nodes_[idx];
        node.rule = rule;
        if (rule == ReductionRule::BaseCatalog) {
            std::string id = *base_formula_id(node.spec);
            node.base = "catalog:" + id;
            node.value = closed_form(id, EvalArgs{node.spec.n, 0, 0}, table_);
        } else {
            node.base = "oracle";
            node.value = direct_eval(node.spec, table_);
        }
    }

    void attach(std::size_t idx, ReductionRule rule, std::vector<std::size_t> children) {
        Rational acc = 0;
        for (std::size_t ch : children) acc += nodes_[ch].coefficient * nodes_[ch].value;
        TraceNode& node = nodes_[idx];
        node.rule = rule;
        node.children = std::move(children);
        node.value = acc;
    }

    const HarmonicTable& table_;
    BasePolicy policy_;
    std::vector<TraceNode> nodes_;
};

void check_theorem_hypothesis(const SumSpec& spec, SumKind kind) {
    if (spec.kind != kind)
        throw domain_error("spec kind does not match evaluator");
    if (spec.outside_theorem_domain())
        throw domain_error("theorem hypothesis violated (needs two plain shift factors with "
                           "p+q > 1): " +
                           spec.describe());
    if (spec.m < 1) throw domain_error("theorem requires m >= 1");
    if (spec.r < 0 || spec.s < 0) throw domain_error("theorem requires r, s >= 0");
    if (spec.n < 0) throw domain_error("n must be nonnegative");
}

std::pair<Rational, ReductionTrace> eval_reduce(const SumSpec& spec, const HarmonicTable& table,
                                                BasePolicy policy) {
    Reducer reducer(table, policy);
    int budget = spec.p + spec.q + static_cast<int>(spec.r) + 2;
    std::size_t root = reducer.build(spec, 1, budget);
    ReductionTrace trace = reducer.finish(root);
    return {trace.value(), std::move(trace)};
}

} // namespace

std::pair<Rational, ReductionTrace> eval_G(const SumSpec& spec, const HarmonicTable& table,
                                           BasePolicy policy) {
    check_theorem_hypothesis(spec, SumKind::G);
    return eval_reduce(spec, table, policy);
}

std::pair<Rational, ReductionTrace> eval_V(const SumSpec& spec, const HarmonicTable& table,
                                           BasePolicy policy) {
    check_theorem_hypothesis(spec, SumKind::V);
    return eval_reduce(spec, table, policy);
}

SumSpec shift_family_spec(ShiftFamily family, std::int64_t n, int m) {
    switch (family) {
        case ShiftFamily::RationalJm: return r2_spec(n, 2, 1, 1, m);
        case ShiftFamily::H1OverJm: return g_spec(n, 1, 0, m, 0, 1);
        case ShiftFamily::H2OverJm: return g_spec(n, 1, 0, m, 0, 2);
        case ShiftFamily::H1SqOverJm: return v_spec(n, 1, 0, m, 0, 1);
        case ShiftFamily::H1SqOverJmSq: return v_spec(n, 2, 0, m, 0, 1);
        case ShiftFamily::H2SqOverJm: return v_spec(n, 1, 0, m, 0, 2);
    }
    throw std::logic_error("bad shift family");
}

Rational eval_shift_recursion(ShiftFamily family, std::int64_t n, int m,
                              const HarmonicTable& table) {
    if (m < 1) throw domain_error("shift recursion requires m >= 1");
    if (n < 0) throw domain_error("shift recursion requires n >= 0");
    ExactCtx c{table};
    switch (family) {
        case ShiftFamily::RationalJm: return rational_jm(c, n, m);
        case ShiftFamily::H1OverJm: return h1_over_jm(c, n, m);
        case ShiftFamily::H2OverJm: return h2_over_jm(c, n, m);
        case ShiftFamily::H1SqOverJm: return h1sq_over_jm(c, n, m);
        case ShiftFamily::H1SqOverJmSq: return h1sq_over_jm_sq(c, n, m);
        case ShiftFamily::H2SqOverJm: return h2sq_over_jm(c, n, m);
    }
    throw std::logic_error("bad shift family");
}

} // namespace harmonica
