#pragma once

#include "harmonica/errors.hpp"
#include "harmonica/f64table.hpp"
#include "harmonica/harmonic.hpp"
#include "harmonica/limit_expr.hpp"
#include "harmonica/oracle.hpp"
#include "harmonica/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace harmonica {

enum class Family { Rational, LinearH1, LinearH2, QuadraticH1, QuadraticH2, Mixed, RecursiveInM };

std::string to_string(Family f);
std::optional<Family> family_from_string(const std::string& s);

// Arguments to a formula evaluation. `m` is the lemma's own integer
// parameter where it has one; `r` is used only by the one two-shift lemma
// (sum of 1/((j+m)(j+r)) with 0 <= m < r).
struct EvalArgs {
    std::int64_t n = 0;
    int m = 0;
    std::int64_t r = 0;
};

enum class OpenSumKind { H1, H2, H1Sq, H2Sq };

// sum_{j=1}^{up} H_{j,o}^(1 or 2) / j^p, summed pairwise. Lives on the
// literal-summation side of the verification fence, like direct_eval.
Rational open_sum(OpenSumKind k, int p, std::int64_t up, const HarmonicTable& t);

// Evaluation context over exact rationals. Formula bodies are written
// against this interface (generically, so the same body also instantiates
// over F64Ctx for the benchmark).
struct ExactCtx {
    using Num = Rational;
    const HarmonicTable& t;

    Num H(std::int64_t j, int m) const { return t.at(j, m); }
    Num q(long long a, long long b = 1) const { return Num(a, b); }
    // 1/k^e
    Num ip(std::int64_t k, int e) const { return inv_pow(k, e); }
    Num S1(std::int64_t up, int p) const { return open_sum(OpenSumKind::H1, p, up, t); }
    Num S2(std::int64_t up, int p) const { return open_sum(OpenSumKind::H2, p, up, t); }
    Num S1sq(std::int64_t up, int p) const { return open_sum(OpenSumKind::H1Sq, p, up, t); }
    Num S2sq(std::int64_t up, int p) const { return open_sum(OpenSumKind::H2Sq, p, up, t); }
    // sum_{j=lo}^{hi} 1/j^e, empty when hi < lo
    Num tail(std::int64_t lo, std::int64_t hi, int e) const {
        Num acc = 0;
        for (std::int64_t j = lo; j <= hi; ++j) acc += inv_pow(j, e);
        return acc;
    }
};

// Same interface over double, backed by prefix tables (see f64table.hpp).
struct F64Ctx {
    using Num = double;
    const F64Table& t;

    Num H(std::int64_t j, int m) const { return t.H(j, m); }
    Num q(long long a, long long b = 1) const {
        return static_cast<double>(a) / static_cast<double>(b);
    }
    Num ip(std::int64_t k, int e) const {
        double kk = static_cast<double>(k), acc = 1.0;
        while (e-- > 0) acc /= kk;
        return acc;
    }
    Num S1(std::int64_t up, int p) const { return t.open(OpenSumKind::H1, p, up); }
    Num S2(std::int64_t up, int p) const { return t.open(OpenSumKind::H2, p, up); }
    Num S1sq(std::int64_t up, int p) const { return t.open(OpenSumKind::H1Sq, p, up); }
    Num S2sq(std::int64_t up, int p) const { return t.open(OpenSumKind::H2Sq, p, up); }
    Num tail(std::int64_t lo, std::int64_t hi, int e) const {
        double acc = 0.0;
        for (std::int64_t j = lo; j <= hi; ++j) acc += ip(j, e);
        return acc;
    }
};

// gap(N) <= c * ln(N)^log_pow / N^n_pow for the convergent entries; the
// constants were frozen after checking actual tails at N = 1000.
struct GapBound {
    Rational c;
    int n_pow = 1;
    int log_pow = 0;
};

// Unstated marks convergent sums whose limit the source leaves open (the
// general-m cases of two of the recursive families).
enum class LimitKind { Convergent, ConvergentParam, Divergent, Unstated };

// Which extra parameters an entry takes, and the ranges verification
// sweeps them over.
struct ParamDomain {
    enum class Kind { None, M, MR } kind = Kind::None;
    int m_min = 0;
    int m_sweep_max = 0; // inclusive
    std::int64_t r_sweep_max = 0; // MR only: sweeps 0 <= m < r <= r_sweep_max
};

struct FormulaEntry {
    std::string id;
    Family family = Family::Rational;
    std::vector<std::string> aliases;
    std::string summand; // rendered summand, for the registry index
    std::int64_t n_min = 0;
    ParamDomain params;

    std::function<SumSpec(const EvalArgs&)> spec;
    std::function<Rational(const ExactCtx&, const EvalArgs&)> exact;
    std::function<double(const F64Ctx&, const EvalArgs&)> f64;

    LimitKind limit_kind = LimitKind::Divergent;
    LimitExpr limit;                                    // Convergent
    std::function<LimitExpr(const EvalArgs&)> limit_fn; // ConvergentParam
    GrowthClass growth;                                 // Divergent
    std::optional<GapBound> gap;

    std::string erratum; // nonempty when the proof's final line replaced the statement

    bool convergent() const {
        return limit_kind == LimitKind::Convergent || limit_kind == LimitKind::ConvergentParam;
    }
    // limit for the given parameters; entry must be convergent
    LimitExpr limit_for(const EvalArgs& a) const;
    void check_domain(const EvalArgs& a) const; // throws domain_error
};

class Catalog {
public:
    static const Catalog& instance();

    const FormulaEntry& entry(const std::string& id) const; // resolves aliases
    const FormulaEntry* find(const std::string& id) const;  // nullptr if unknown
    const std::vector<FormulaEntry>& entries() const { return entries_; }

    // deterministic id order; optional family filter
    std::vector<const FormulaEntry*> list(std::optional<Family> family = std::nullopt) const;

private:
    Catalog();
    std::vector<FormulaEntry> entries_;
    std::map<std::string, std::size_t> index_;
};

// Evaluates one formula exactly. Checks the entry's domain and relies on the
// table for capacity.
Rational closed_form(const std::string& id, const EvalArgs& args, const HarmonicTable& table);

// A formula's limit behaviour: an exact expression over the constant basis
// for convergent sums, a growth class for divergent ones, or unstated.
struct LimitResult {
    LimitKind kind;
    LimitExpr expr;     // Convergent / ConvergentParam
    GrowthClass growth; // Divergent
};

// Throws unknown_formula_error; params feed the parameterized limits.
LimitResult limit_of(const std::string& id, const EvalArgs& params = {});

// Fluent builder used by the registration files.
class EntryBuilder {
public:
    EntryBuilder(std::string id, Family family) {
        e_.id = std::move(id);
        e_.family = family;
    }

    EntryBuilder& alias(std::string a) {
        e_.aliases.push_back(std::move(a));
        return *this;
    }
    EntryBuilder& summand(std::string s) {
        e_.summand = std::move(s);
        return *this;
    }
    EntryBuilder& n_min(std::int64_t n) {
        e_.n_min = n;
        return *this;
    }
    EntryBuilder& param_m(int m_min, int m_sweep_max) {
        e_.params.kind = ParamDomain::Kind::M;
        e_.params.m_min = m_min;
        e_.params.m_sweep_max = m_sweep_max;
        return *this;
    }
    EntryBuilder& param_mr(std::int64_t r_sweep_max) {
        e_.params.kind = ParamDomain::Kind::MR;
        e_.params.r_sweep_max = r_sweep_max;
        return *this;
    }
    EntryBuilder& spec(std::function<SumSpec(const EvalArgs&)> f) {
        e_.spec = std::move(f);
        return *this;
    }
    template <class F>
    EntryBuilder& form(F f) {
        e_.exact = [f](const ExactCtx& c, const EvalArgs& a) -> Rational { return f(c, a); };
        e_.f64 = [f](const F64Ctx& c, const EvalArgs& a) -> double { return f(c, a); };
        return *this;
    }
    EntryBuilder& limit(LimitExpr l) {
        e_.limit_kind = LimitKind::Convergent;
        e_.limit = std::move(l);
        return *this;
    }
    EntryBuilder& limit_fn(std::function<LimitExpr(const EvalArgs&)> f) {
        e_.limit_kind = LimitKind::ConvergentParam;
        e_.limit_fn = std::move(f);
        return *this;
    }
    EntryBuilder& divergent(std::string growth) {
        e_.limit_kind = LimitKind::Divergent;
        e_.growth = GrowthClass{std::move(growth)};
        return *this;
    }
    EntryBuilder& limit_unstated() {
        e_.limit_kind = LimitKind::Unstated;
        return *this;
    }
    EntryBuilder& gap(long long c_num, long long c_den, int n_pow, int log_pow) {
        e_.gap = GapBound{Rational(c_num, c_den), n_pow, log_pow};
        return *this;
    }
    EntryBuilder& erratum(std::string note) {
        e_.erratum = std::move(note);
        return *this;
    }
    void done(std::vector<FormulaEntry>& out) { out.push_back(std::move(e_)); }

private:
    FormulaEntry e_;
};

// registration units
void register_rational_entries(std::vector<FormulaEntry>& out);
void register_recursive_m_entries(std::vector<FormulaEntry>& out);
void register_linear_h1_entries(std::vector<FormulaEntry>& out);
void register_linear_h2_entries(std::vector<FormulaEntry>& out);
void register_quadratic_h1_entries(std::vector<FormulaEntry>& out);
void register_quadratic_h2_entries(std::vector<FormulaEntry>& out);
void register_mixed_entries(std::vector<FormulaEntry>& out);

} // namespace harmonica
