#include "harmonica/bench.hpp"
#include "harmonica/errors.hpp"
#include "harmonica/json_io.hpp"
#include "harmonica/limits.hpp"
#include "harmonica/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

using namespace harmonica;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUnknownId = 2;
constexpr int kExitDomain = 3;

void emit(const json& j, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file " + output);
    out << j.dump(2) << "\n";
}

SumKind kind_from_string(const std::string& s) {
    if (s == "G") return SumKind::G;
    if (s == "V") return SumKind::V;
    if (s == "R2") return SumKind::R2;
    if (s == "R3") return SumKind::R3;
    if (s == "MIXED") return SumKind::Mixed;
    throw CLI::ValidationError("--spec", "expected G|V|R2|R3|MIXED");
}

struct EvalOptions {
    std::string id;
    std::string spec_kind;
    std::int64_t n = 0;
    int p = 0, q = 0, w = 0;
    std::int64_t r = 0, s = 0, u = 0;
    int m = 1;
    int shift = 0;
    bool explain = false;
    int digits = 12;
};

int run_eval(const EvalOptions& opt) {
    if (!opt.id.empty()) {
        const FormulaEntry* entry = Catalog::instance().find(opt.id);
        if (!entry) {
            std::cerr << "unknown formula id: " << opt.id << "\n";
            return kExitUnknownId;
        }
        EvalArgs args{opt.n, opt.m, opt.r};
        if (entry->params.kind == ParamDomain::Kind::None) args = EvalArgs{opt.n, 0, 0};
        try {
            HarmonicTable table(opt.n + std::max<std::int64_t>(opt.m, 8) + opt.r + 8);
            Rational value = closed_form(entry->id, args, table);
            std::cout << to_fraction_string(value) << "\n";
            std::cout << "= " << to_decimal_string(value, opt.digits) << "\n";
        } catch (const domain_error& e) {
            std::cerr << e.what() << "\n";
            return kExitDomain;
        }
        if (opt.explain)
            std::cerr << "--explain applies to raw G/V specs (theorem reduction)\n";
        return 0;
    }
    if (opt.spec_kind.empty()) {
        std::cerr << "eval needs --id or --spec\n";
        return kExitDomain;
    }
    SumSpec spec;
    spec.kind = kind_from_string(opt.spec_kind);
    spec.n = opt.n;
    spec.p = opt.p; spec.q = opt.q; spec.w = opt.w;
    spec.r = opt.r; spec.s = opt.s; spec.u = opt.u;
    spec.m = opt.m;
    spec.shift = opt.shift;
    try {
        HarmonicTable table(spec.n + std::max<std::int64_t>({spec.r, spec.s, spec.u, 8}) +
                            spec.shift + 8);
        Rational value;
        if ((spec.kind == SumKind::G || spec.kind == SumKind::V) &&
            !spec.outside_theorem_domain()) {
            auto eval = spec.kind == SumKind::G ? eval_G : eval_V;
            auto [v, trace] = eval(spec, table, BasePolicy::CatalogFirst);
            value = v;
            if (opt.explain) std::cout << trace_to_json(trace).dump(2) << "\n";
        } else {
            value = direct_eval(spec, table);
            if (opt.explain)
                std::cerr << "no reduction trace: spec is outside the theorem domain; "
                             "evaluated directly\n";
        }
        std::cout << to_fraction_string(value) << "\n";
        std::cout << "= " << to_decimal_string(value, opt.digits) << "\n";
        return 0;
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }
}

struct VerifyOptions {
    SweepConfig config;
    std::string family;
    std::string output;
    bool deep = false;
    bool skip_theorems = false;
};

int run_verify(VerifyOptions opt) {
    if (opt.deep) opt.config.n_max = 500;
    if (!opt.family.empty()) {
        auto fam = family_from_string(opt.family);
        if (!fam) {
            std::cerr << "unknown family: " << opt.family << "\n";
            return kExitDomain;
        }
        opt.config.family = fam;
    }
    if (opt.skip_theorems) opt.config.run_theorems = false;
    VerifyReport report = run_verification(opt.config);
    emit(verify_report_to_json(report), opt.output);
    if (!report.all_pass) {
        const CheckRow* fail = report.first_failure();
        std::cerr << "FAIL " << fail->id << " at n=" << fail->fail_n;
        if (fail->fail_m != 0) std::cerr << " m=" << fail->fail_m;
        std::cerr << ": lhs=" << fail->lhs << " rhs=" << fail->rhs << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}

struct LimitsOptions {
    std::int64_t big_n = 10000;
    std::int64_t table_n = 100000;
    int bits = 0;
    int digits = 12;
    std::string output;
};

int run_limits(const LimitsOptions& opt) {
    int bits = opt.bits > 0 ? opt.bits : default_precision_bits();
    json convergent = json::array();
    json divergent = json::array();
    HarmonicTable shared_table(opt.big_n + 18);
    for (const FormulaEntry* e : Catalog::instance().list()) {
        if (e->limit_kind == LimitKind::Divergent) {
            divergent.push_back(
                {{"id", e->id}, {"status", "DIVERGENT"}, {"growth_class", e->growth.description}});
            continue;
        }
        if (e->limit_kind == LimitKind::Unstated) {
            divergent.push_back({{"id", e->id}, {"status", "UNSTATED"}});
            continue;
        }
        if (!e->gap) continue;
        std::vector<EvalArgs> params;
        switch (e->params.kind) {
            case ParamDomain::Kind::None: params.push_back({}); break;
            case ParamDomain::Kind::M:
                for (int m = e->params.m_min; m <= std::min(e->params.m_min + 2, 8); ++m)
                    params.push_back(EvalArgs{0, m, 0});
                break;
            case ParamDomain::Kind::MR:
                params.push_back(EvalArgs{0, 0, 2});
                params.push_back(EvalArgs{0, 1, 3});
                break;
        }
        for (const EvalArgs& args : params) {
            ConvergenceReport r =
                check_convergence(e->id, opt.big_n, bits, args, &shared_table);
            convergent.push_back(convergence_report_to_json(r, opt.digits));
        }
    }
    json out;
    out["precision_bits"] = bits;
    out["N"] = opt.big_n;
    out["convergent"] = std::move(convergent);
    out["divergent"] = std::move(divergent);
    out["known_limits_N"] = opt.table_n;
    out["known_limits"] =
        known_limit_table_json(known_limit_table(opt.table_n, bits), bits, opt.digits);
    emit(out, opt.output);
    bool all_pass = true;
    for (const auto& row : out["convergent"])
        if (row["status"] != "PASS") all_pass = false;
    for (const auto& row : out["known_limits"])
        if (row["status"] != "PASS") all_pass = false;
    return all_pass ? 0 : kExitVerifyFailed;
}

struct BenchOptions {
    std::vector<std::int64_t> sizes{1000, 10000, 100000, 1000000};
    int reps = 5;
    std::string family;
    std::string output;
};

int run_bench_cmd(const BenchOptions& opt) {
    std::optional<Family> family;
    if (!opt.family.empty()) {
        family = family_from_string(opt.family);
        if (!family) {
            std::cerr << "unknown family: " << opt.family << "\n";
            return kExitDomain;
        }
    }
    BenchReport report = run_bench(opt.sizes, opt.reps, family);
    emit(bench_report_to_json(report), opt.output);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact harmonic / quadratic harmonic sum catalog"};
    app.require_subcommand(1);

    EvalOptions eval_opt;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula or a raw sum spec");
    eval_cmd->add_option("--id", eval_opt.id, "formula id (see `index`)");
    eval_cmd->add_option("--spec", eval_opt.spec_kind, "raw spec kind: G|V|R2|R3|MIXED");
    eval_cmd->add_option("--n", eval_opt.n, "upper summation limit")->required();
    eval_cmd->add_option("--p", eval_opt.p);
    eval_cmd->add_option("--q", eval_opt.q);
    eval_cmd->add_option("--w", eval_opt.w);
    eval_cmd->add_option("--r", eval_opt.r);
    eval_cmd->add_option("--s", eval_opt.s);
    eval_cmd->add_option("--u", eval_opt.u);
    eval_cmd->add_option("--m", eval_opt.m);
    eval_cmd->add_option("--shift", eval_opt.shift);
    eval_cmd->add_flag("--explain", eval_opt.explain, "print the reduction trace as JSON");
    eval_cmd->add_option("--digits", eval_opt.digits, "decimal digits to print");

    VerifyOptions verify_opt;
    verify_opt.config.parallelism =
        std::max(1u, std::thread::hardware_concurrency());
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the exactness sweeps; exit 0 iff all hold");
    verify_cmd->add_option("--n-max", verify_opt.config.n_max, "catalog sweep bound");
    verify_cmd->add_option("--m-max", verify_opt.config.m_max, "m sweep bound");
    verify_cmd->add_option("--pq-max", verify_opt.config.pq_max, "theorem grid p+q bound");
    verify_cmd->add_option("--rs-max", verify_opt.config.rs_max, "theorem grid shift bound");
    verify_cmd->add_option("--theorem-n-max", verify_opt.config.theorem_n_max);
    verify_cmd->add_option("--parallelism", verify_opt.config.parallelism);
    verify_cmd->add_option("--family", verify_opt.family, "restrict the catalog suite");
    verify_cmd->add_option("--output", verify_opt.output, "report path (default stdout)");
    verify_cmd->add_flag("--deep", verify_opt.deep, "extend the catalog sweep to n <= 500");
    verify_cmd->add_flag("--skip-theorems", verify_opt.skip_theorems);
    verify_cmd
        ->add_option("--corrupt-registry", verify_opt.config.corrupt_id,
                     "test fixture: perturb this entry's closed form")
        ->group(""); // hidden

    LimitsOptions limits_opt;
    CLI::App* limits_cmd =
        app.add_subcommand("limits", "convergence report and the known-limit table");
    limits_cmd->add_option("--N", limits_opt.big_n, "convergence schedule endpoint");
    limits_cmd->add_option("--table-N", limits_opt.table_n, "known-limit truncation point");
    limits_cmd->add_option("--bits", limits_opt.bits, "precision bits (default 256 or env)");
    limits_cmd->add_option("--digits", limits_opt.digits);
    limits_cmd->add_option("--output", limits_opt.output);

    BenchOptions bench_opt;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time direct vs closed-form vs recursion routes");
    bench_cmd->add_option("--sizes", bench_opt.sizes);
    bench_cmd->add_option("--reps", bench_opt.reps);
    bench_cmd->add_option("--family", bench_opt.family);
    bench_cmd->add_option("--output", bench_opt.output);

    std::string index_output;
    CLI::App* index_cmd = app.add_subcommand("index", "dump the formula registry as JSON");
    index_cmd->add_option("--output", index_output);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval_cmd->parsed()) return run_eval(eval_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (limits_cmd->parsed()) return run_limits(limits_opt);
        if (bench_cmd->parsed()) return run_bench_cmd(bench_opt);
        if (index_cmd->parsed()) {
            emit(registry_index_json(), index_output);
            return 0;
        }
    } catch (const unknown_formula_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUnknownId;
    } catch (const domain_error& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}
