#include "harmonica/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>
#include <stdexcept>

namespace harmonica {

std::string to_string(Family f) {
    switch (f) {
        case Family::Rational: return "RATIONAL";
        case Family::LinearH1: return "LINEAR_H1";
        case Family::LinearH2: return "LINEAR_H2";
        case Family::QuadraticH1: return "QUADRATIC_H1";
        case Family::QuadraticH2: return "QUADRATIC_H2";
        case Family::Mixed: return "MIXED";
        case Family::RecursiveInM: return "RECURSIVE_IN_M";
    }
    return "?";
}

std::optional<Family> family_from_string(const std::string& s) {
    for (Family f : {Family::Rational, Family::LinearH1, Family::LinearH2, Family::QuadraticH1,
                     Family::QuadraticH2, Family::Mixed, Family::RecursiveInM})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

namespace {

Rational open_range(OpenSumKind k, int p, std::int64_t lo, std::int64_t hi,
                    const HarmonicTable& t) {
    if (lo > hi) return Rational(0);
    if (hi - lo < 16) {
        Rational acc = 0;
        for (std::int64_t j = lo; j <= hi; ++j) {
            Rational term;
            switch (k) {
                case OpenSumKind::H1: term = t.at(j, 1); break;
                case OpenSumKind::H2: term = t.at(j, 2); break;
                case OpenSumKind::H1Sq: term = t.at(j, 1) * t.at(j, 1); break;
                case OpenSumKind::H2Sq: term = t.at(j, 2) * t.at(j, 2); break;
            }
            acc += term / Rational(ipow(Int(j), p));
        }
        return acc;
    }
    std::int64_t mid = lo + (hi - lo) / 2;
    // pairwise split keeps intermediate denominators small
    return open_range(k, p, lo, mid, t) + open_range(k, p, mid + 1, hi, t);
}

struct OpenSumKey {
    std::uint64_t table;
    int kind;
    int p;
    std::int64_t up;
    bool operator<(const OpenSumKey& o) const {
        return std::tie(table, kind, p, up) < std::tie(o.table, o.kind, o.p, o.up);
    }
};

std::mutex g_open_sum_mutex;
std::map<OpenSumKey, Rational> g_open_sum_cache;

} // namespace

Rational open_sum(OpenSumKind k, int p, std::int64_t up, const HarmonicTable& t) {
    if (up > 0) {
        int order = (k == OpenSumKind::H2 || k == OpenSumKind::H2Sq) ? 2 : 1;
        (void)t.at(up, order);
    }
    // memoized per table: convergence schedules hit the same prefix points
    // across many entries
    OpenSumKey key{t.serial(), static_cast<int>(k), p, up};
    {
        std::lock_guard<std::mutex> lock(g_open_sum_mutex);
        auto it = g_open_sum_cache.find(key);
        if (it != g_open_sum_cache.end()) return it->second;
    }
    Rational value = open_range(k, p, 1, up, t);
    std::lock_guard<std::mutex> lock(g_open_sum_mutex);
    return g_open_sum_cache.emplace(key, std::move(value)).first->second;
}

LimitExpr FormulaEntry::limit_for(const EvalArgs& a) const {
    switch (limit_kind) {
        case LimitKind::Convergent: return limit;
        case LimitKind::ConvergentParam: return limit_fn(a);
        case LimitKind::Divergent:
            throw domain_error("formula " + id + " is divergent; no limit");
        case LimitKind::Unstated:
            throw domain_error("formula " + id + " has no stated limit");
    }
    throw std::logic_error("bad limit kind");
}

void FormulaEntry::check_domain(const EvalArgs& a) const {
    if (a.n < n_min)
        throw domain_error("formula " + id + ": n=" + std::to_string(a.n) +
                           " below domain minimum n>=" + std::to_string(n_min));
    switch (params.kind) {
        case ParamDomain::Kind::None:
            break;
        case ParamDomain::Kind::M:
            if (a.m < params.m_min)
                throw domain_error("formula " + id + ": m=" + std::to_string(a.m) +
                                   " below domain minimum m>=" + std::to_string(params.m_min));
            break;
        case ParamDomain::Kind::MR:
            if (a.m < 0 || a.r <= a.m)
                throw domain_error("formula " + id + ": requires 0 <= m < r, got m=" +
                                   std::to_string(a.m) + ", r=" + std::to_string(a.r));
            break;
    }
}

Catalog::Catalog() {
    register_rational_entries(entries_);
    register_recursive_m_entries(entries_);
    register_linear_h1_entries(entries_);
    register_linear_h2_entries(entries_);
    register_quadratic_h1_entries(entries_);
    register_quadratic_h2_entries(entries_);
    register_mixed_entries(entries_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto insert = [&](const std::string& key) {
            if (!index_.emplace(key, i).second)
                throw std::logic_error("duplicate formula id: " + key);
        };
        insert(entries_[i].id);
        for (const auto& a : entries_[i].aliases) insert(a);
    }
}

const Catalog& Catalog::instance() {
    static const Catalog cat;
    return cat;
}

const FormulaEntry* Catalog::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

const FormulaEntry& Catalog::entry(const std::string& id) const {
    const FormulaEntry* e = find(id);
    if (!e) throw unknown_formula_error(id);
    return *e;
}

std::vector<const FormulaEntry*> Catalog::list(std::optional<Family> family) const {
    std::vector<const FormulaEntry*> out;
    for (const auto& e : entries_)
        if (!family || e.family == *family) out.push_back(&e);
    std::sort(out.begin(), out.end(),
              [](const FormulaEntry* a, const FormulaEntry* b) { return a->id < b->id; });
    return out;
}

Rational closed_form(const std::string& id, const EvalArgs& args, const HarmonicTable& table) {
    const FormulaEntry& e = Catalog::instance().entry(id);
    e.check_domain(args);
    ExactCtx ctx{table};
    return e.exact(ctx, args);
}

LimitResult limit_of(const std::string& id, const EvalArgs& params) {
    const FormulaEntry& e = Catalog::instance().entry(id);
    LimitResult result;
    result.kind = e.limit_kind;
    switch (e.limit_kind) {
        case LimitKind::Convergent:
        case LimitKind::ConvergentParam:
            result.expr = e.limit_for(params);
            break;
        case LimitKind::Divergent:
            result.growth = e.growth;
            break;
        case LimitKind::Unstated:
            break;
    }
    return result;
}

std::string to_string(BasisConstant b) {
    switch (b) {
        case BasisConstant::One: return "1";
        case BasisConstant::Pi2: return "pi^2";
        case BasisConstant::Pi4: return "pi^4";
        case BasisConstant::Pi6: return "pi^6";
        case BasisConstant::Zeta3: return "zeta(3)";
        case BasisConstant::Zeta5: return "zeta(5)";
        case BasisConstant::Zeta3Sq: return "zeta(3)^2";
        case BasisConstant::Pi2Zeta3: return "pi^2 zeta(3)";
    }
    return "?";
}

std::string LimitExpr::describe() const {
    if (coeff_.empty()) return "0";
    std::string out;
    for (const auto& [b, c] : coeff_) {
        if (!out.empty()) out += " + ";
        out += "(" + to_fraction_string(c) + ")*" + to_string(b);
    }
    return out;
}

} // namespace harmonica
