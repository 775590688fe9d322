#include "harmonica/json_io.hpp"

namespace harmonica {

using nlohmann::json;

json limit_expr_to_json(const LimitExpr& e) {
    json out = json::object();
    for (const auto& [b, c] : e.coefficients()) out[to_string(b)] = to_fraction_string(c);
    return out;
}

json entry_to_json(const FormulaEntry& e) {
    json out;
    out["id"] = e.id;
    out["family"] = to_string(e.family);
    out["summand"] = e.summand;
    if (!e.aliases.empty()) out["aliases"] = e.aliases;
    out["n_min"] = e.n_min;
    switch (e.params.kind) {
        case ParamDomain::Kind::None:
            break;
        case ParamDomain::Kind::M:
            out["params"] = {{"m_min", e.params.m_min}, {"m_sweep_max", e.params.m_sweep_max}};
            break;
        case ParamDomain::Kind::MR:
            out["params"] = {{"constraint", "0 <= m < r"}, {"r_sweep_max", e.params.r_sweep_max}};
            break;
    }
    switch (e.limit_kind) {
        case LimitKind::Convergent:
            out["limit"] = limit_expr_to_json(e.limit);
            break;
        case LimitKind::ConvergentParam:
            out["limit"] = "parameterized";
            break;
        case LimitKind::Divergent:
            out["growth_class"] = e.growth.description;
            break;
        case LimitKind::Unstated:
            out["limit"] = "unstated";
            break;
    }
    if (e.gap) {
        out["gap_bound"] = {{"c", to_fraction_string(e.gap->c)},
                            {"n_pow", e.gap->n_pow},
                            {"log_pow", e.gap->log_pow}};
    }
    if (!e.erratum.empty()) out["erratum"] = e.erratum;
    return out;
}

json registry_index_json() {
    json out = json::array();
    for (const FormulaEntry* e : Catalog::instance().list()) out.push_back(entry_to_json(*e));
    return out;
}

json trace_to_json(const ReductionTrace& t) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
        json node;
        node["spec"] = n.spec.describe();
        node["rule"] = to_string(n.rule);
        node["coefficient"] = to_fraction_string(n.coefficient);
        node["value"] = to_fraction_string(n.value);
        if (!n.children.empty()) node["children"] = n.children;
        if (!n.base.empty()) node["base"] = n.base;
        nodes.push_back(std::move(node));
    }
    return json{{"root", t.root}, {"nodes", std::move(nodes)}};
}

namespace {

json row_to_json(const CheckRow& r) {
    json out;
    out["checked_range"] = r.checked_range;
    out["status"] = r.pass ? "PASS" : "FAIL";
    if (!r.pass) {
        out["first_failure_n"] = r.fail_n;
        if (r.fail_m != 0) out["m"] = r.fail_m;
        if (r.fail_r != 0) out["r"] = r.fail_r;
        out["lhs"] = r.lhs;
        out["rhs"] = r.rhs;
    }
    return out;
}

} // namespace

json verify_report_to_json(const VerifyReport& r) {
    json suites = json::object();
    for (const auto& row : r.rows) suites[row.suite][row.id] = row_to_json(row);
    json out;
    out["config"] = {{"n_max", r.config.n_max},
                     {"m_max", r.config.m_max},
                     {"pq_max", r.config.pq_max},
                     {"rs_max", r.config.rs_max},
                     {"theorem_n_max", r.config.theorem_n_max},
                     {"parallelism", r.config.parallelism}};
    if (r.config.family) out["config"]["family"] = to_string(*r.config.family);
    out["suites"] = std::move(suites);
    out["all_pass"] = r.all_pass;
    out["seconds"] = r.seconds;
    return out;
}

json convergence_report_to_json(const ConvergenceReport& r, int decimal_digits) {
    json points = json::array();
    for (const auto& p : r.points)
        points.push_back({{"n", p.n}, {"gap", to_decimal_string(p.gap, decimal_digits)}});
    json out;
    out["id"] = r.id;
    if (r.m != 0) out["m"] = r.m;
    out["limit"] = limit_expr_to_json(r.limit);
    out["limit_decimal"] = eval_limit_decimal(r.limit, r.precision_bits, decimal_digits);
    out["precision_bits"] = r.precision_bits;
    out["points"] = std::move(points);
    out["bound"] = to_decimal_string(r.bound, decimal_digits);
    out["monotone"] = r.monotone;
    out["status"] = r.pass ? "PASS" : "FAIL";
    return out;
}

json known_limit_table_json(const std::vector<KnownLimitRow>& rows, int precision_bits,
                            int decimal_digits) {
    json out = json::array();
    for (const auto& row : rows) {
        out.push_back({{"series", row.name},
                       {"limit", limit_expr_to_json(row.limit)},
                       {"limit_decimal",
                        to_decimal_string(eval_limit(row.limit, precision_bits), decimal_digits)},
                       {"truncated", to_decimal_string(row.truncated, decimal_digits)},
                       {"gap", to_decimal_string(row.gap, decimal_digits)},
                       {"bound", to_decimal_string(row.bound, decimal_digits)},
                       {"status", row.pass ? "PASS" : "FAIL"}});
    }
    return out;
}

json bench_report_to_json(const BenchReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json out{{"id", row.id},
                 {"n", row.n},
                 {"direct_seconds", row.direct_seconds},
                 {"closed_seconds", row.closed_seconds},
                 {"rel_disagreement", row.rel_disagreement}};
        if (row.has_recursion) out["recursion_seconds"] = row.recursion_seconds;
        rows.push_back(std::move(out));
    }
    return json{{"sizes", r.sizes},
                {"repetitions", r.repetitions},
                {"table_n", r.table_n},
                {"table_build_seconds", r.table_build_seconds},
                {"rows", std::move(rows)}};
}

} // namespace harmonica
