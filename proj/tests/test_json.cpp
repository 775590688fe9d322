#include "harmonica/bench.hpp"
#include "harmonica/json_io.hpp"
#include "mini_schema.hpp"

#include <doctest.h>

#include <fstream>

using namespace harmonica;
using nlohmann::json;

TEST_SUITE_BEGIN("json");

namespace {

const mini_schema::Validator& schema() {
    static const mini_schema::Validator v = [] {
        std::ifstream in(HARMONICA_SCHEMA_PATH);
        REQUIRE(in.good());
        json root;
        in >> root;
        return mini_schema::Validator(std::move(root));
    }();
    return v;
}

} // namespace

TEST_CASE("registry index shape") {
    json index = registry_index_json();
    CHECK(index.is_array());
    CHECK(index.size() >= 80);
    for (const auto& row : index) {
        CHECK(row.contains("id"));
        CHECK(row.contains("family"));
        CHECK(row.contains("summand"));
        bool has_limit_info = row.contains("limit") || row.contains("growth_class");
        CHECK(has_limit_info);
    }
}

TEST_CASE("exact values serialize as fraction strings") {
    HarmonicTable table(30, 6);
    auto [v, trace] = eval_G(g_spec(4, 1, 1, 0, 2, 1), table, BasePolicy::CatalogFirst);
    (void)v;
    json t = trace_to_json(trace);
    CHECK(t.contains("root"));
    CHECK(t.contains("nodes"));
    for (const auto& node : t["nodes"]) {
        CHECK(node["value"].is_string());
        CHECK(node["coefficient"].is_string());
    }
}

TEST_CASE("verify report shape") {
    SweepConfig config;
    config.n_max = 6;
    config.run_theorems = false;
    config.family = Family::Mixed;
    VerifyReport report = run_verification(config);
    json j = verify_report_to_json(report);
    CHECK(j["all_pass"].is_boolean());
    CHECK(j["suites"].contains("catalog_vs_oracle"));
    CHECK(j["suites"]["catalog_vs_oracle"].size() == 3);
    for (const auto& [id, row] : j["suites"]["catalog_vs_oracle"].items()) {
        CHECK(!id.empty());
        CHECK(row.contains("checked_range"));
        CHECK(row.contains("status"));
    }
}

// every emitted document type validates against the shipped schema
TEST_CASE("outputs validate against the published schema") {
    CHECK_NOTHROW(schema().validate(registry_index_json(), "registry_index"));

    HarmonicTable table(40, 6);
    auto [v, trace] = eval_V(v_spec(7, 2, 1, 1, 3, 2), table, BasePolicy::CatalogFirst);
    (void)v;
    CHECK_NOTHROW(schema().validate(trace_to_json(trace), "trace"));

    SweepConfig config;
    config.n_max = 5;
    config.theorem_n_max = 4;
    config.pq_max = 2;
    config.rs_max = 1;
    config.family = Family::Mixed;
    config.corrupt_id = "lemSumHi1Hi2i"; // exercise the failure fields too
    VerifyReport report = run_verification(config);
    CHECK(!report.all_pass);
    CHECK_NOTHROW(schema().validate(verify_report_to_json(report), "verify_report"));

    json limits;
    limits["precision_bits"] = 128;
    limits["N"] = 64;
    HarmonicTable conv_table(80, 6);
    limits["convergent"] = json::array(
        {convergence_report_to_json(check_convergence("lemSum0", 64, 128, {}, &conv_table), 10),
         convergence_report_to_json(
             check_convergence("lemSumj2jm", 64, 128, EvalArgs{0, 2, 0}, &conv_table), 10)});
    limits["divergent"] = json::array({{{"id", "lemSumHj1"}, {"status", "DIVERGENT"},
                                        {"growth_class", "n ln n"}}});
    limits["known_limits_N"] = 500;
    limits["known_limits"] = known_limit_table_json(known_limit_table(500, 128), 128, 10);
    CHECK_NOTHROW(schema().validate(limits, "limits_report"));

    BenchReport bench = run_bench({64, 256}, 2, Family::Mixed);
    CHECK_NOTHROW(schema().validate(bench_report_to_json(bench), "bench_report"));

    // negative control for the validator itself
    json bad = registry_index_json();
    bad[0]["family"] = "NOT_A_FAMILY";
    CHECK_THROWS(schema().validate(bad, "registry_index"));
}

TEST_CASE("verify report is deterministic given the config") {
    SweepConfig config;
    config.n_max = 8;
    config.theorem_n_max = 5;
    config.pq_max = 2;
    config.rs_max = 1;
    config.family = Family::QuadraticH2;
    config.parallelism = 4;
    json a = verify_report_to_json(run_verification(config));
    json b = verify_report_to_json(run_verification(config));
    a.erase("seconds");
    b.erase("seconds");
    CHECK(a == b);
}

TEST_SUITE_END();
