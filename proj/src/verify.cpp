#include "harmonica/verify.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace harmonica {

namespace {

std::vector<EvalArgs> param_grid(const FormulaEntry& entry, int m_sweep_max) {
    std::vector<EvalArgs> grid;
    switch (entry.params.kind) {
        case ParamDomain::Kind::None:
            grid.push_back(EvalArgs{});
            break;
        case ParamDomain::Kind::M: {
            int hi = std::max(m_sweep_max, entry.params.m_sweep_max);
            for (int m = entry.params.m_min; m <= hi; ++m) grid.push_back(EvalArgs{0, m, 0});
            break;
        }
        case ParamDomain::Kind::MR:
            for (std::int64_t r = 1; r <= entry.params.r_sweep_max; ++r)
                for (std::int64_t m = 0; m < r; ++m)
                    grid.push_back(EvalArgs{0, static_cast<int>(m), r});
            break;
    }
    return grid;
}

std::string param_desc(const FormulaEntry& entry, int m_sweep_max) {
    switch (entry.params.kind) {
        case ParamDomain::Kind::None: return "";
        case ParamDomain::Kind::M: {
            int hi = std::max(m_sweep_max, entry.params.m_sweep_max);
            return ", m in [" + std::to_string(entry.params.m_min) + "," + std::to_string(hi) +
                   "]";
        }
        case ParamDomain::Kind::MR:
            return ", 0 <= m < r <= " + std::to_string(entry.params.r_sweep_max);
    }
    return "";
}

} // namespace

CheckRow check_catalog_entry(const FormulaEntry& entry, std::int64_t n_max, int m_sweep_max,
                             const HarmonicTable& table, bool corrupt) {
    CheckRow row;
    row.suite = "catalog_vs_oracle";
    row.id = entry.id;
    row.checked_range = "n in [" + std::to_string(entry.n_min) + "," + std::to_string(n_max) +
                        "]" + param_desc(entry, m_sweep_max);
    ExactCtx ctx{table};
    for (EvalArgs args : param_grid(entry, m_sweep_max)) {
        for (std::int64_t n = entry.n_min; n <= n_max; ++n) {
            args.n = n;
            Rational lhs = entry.exact(ctx, args);
            if (corrupt) lhs += Rational(1, 7);
            Rational rhs = direct_eval(entry.spec(args), table);
            if (lhs != rhs) {
                row.pass = false;
                row.fail_n = n;
                row.fail_m = args.m;
                row.fail_r = args.r;
                row.lhs = to_fraction_string(lhs);
                row.rhs = to_fraction_string(rhs);
                return row;
            }
        }
    }
    return row;
}

namespace {

struct TheoremCell {
    SumKind kind;
    int p, q, m;
    std::int64_t r, s;
};

std::string cell_id(const TheoremCell& c) {
    std::ostringstream os;
    os << (c.kind == SumKind::G ? "G" : "V") << "(p=" << c.p << ",q=" << c.q << ",r=" << c.r
       << ",s=" << c.s << ",m=" << c.m << ")";
    return os.str();
}

// catalog-vs-oracle joined with both base policies in one pass
void check_theorem_cell(const TheoremCell& cell, std::int64_t n_max, const HarmonicTable& table,
                        CheckRow& oracle_row, CheckRow& policy_row) {
    oracle_row.suite = "recursion_vs_oracle";
    policy_row.suite = "base_policy_independence";
    oracle_row.id = policy_row.id = cell_id(cell);
    oracle_row.checked_range = policy_row.checked_range =
        "n in [0," + std::to_string(n_max) + "]";
    for (std::int64_t n = 0; n <= n_max; ++n) {
        SumSpec spec = cell.kind == SumKind::G ? g_spec(n, cell.p, cell.q, cell.r, cell.s, cell.m)
                                               : v_spec(n, cell.p, cell.q, cell.r, cell.s, cell.m);
        auto eval = cell.kind == SumKind::G ? eval_G : eval_V;
        Rational via_catalog = eval(spec, table, BasePolicy::CatalogFirst).first;
        Rational via_oracle_bases = eval(spec, table, BasePolicy::OracleOnly).first;
        Rational truth = direct_eval(spec, table);
        if (oracle_row.pass && via_catalog != truth) {
            oracle_row.pass = false;
            oracle_row.fail_n = n;
            oracle_row.fail_m = cell.m;
            oracle_row.lhs = to_fraction_string(via_catalog);
            oracle_row.rhs = to_fraction_string(truth);
        }
        if (oracle_row.pass && via_oracle_bases != truth) {
            oracle_row.pass = false;
            oracle_row.fail_n = n;
            oracle_row.fail_m = cell.m;
            oracle_row.lhs = to_fraction_string(via_oracle_bases);
            oracle_row.rhs = to_fraction_string(truth);
        }
        if (policy_row.pass && via_catalog != via_oracle_bases) {
            policy_row.pass = false;
            policy_row.fail_n = n;
            policy_row.fail_m = cell.m;
            policy_row.lhs = to_fraction_string(via_catalog);
            policy_row.rhs = to_fraction_string(via_oracle_bases);
        }
        if (!oracle_row.pass && !policy_row.pass) return;
    }
}

template <class Task>
void run_pool(std::vector<Task>& tasks, int parallelism) {
    if (parallelism <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            tasks[i]();
        }
    };
    std::vector<std::thread> threads;
    for (int i = 0; i < parallelism; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
}

} // namespace

VerifyReport run_verification(const SweepConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport report;
    report.config = config;

    const Catalog& cat = Catalog::instance();

    // one shared table, sized for the largest shifted lookup any suite makes
    std::int64_t table_n = 0;
    if (config.run_catalog)
        table_n = std::max(table_n, config.n_max + std::max<std::int64_t>(8, config.m_max) + 2);
    if (config.run_theorems)
        table_n = std::max(table_n, config.theorem_n_max + config.rs_max + 2);
    HarmonicTable table(table_n);

    std::vector<CheckRow> catalog_rows;
    std::vector<std::function<void()>> tasks;

    if (config.run_catalog) {
        auto entries = cat.list(config.family);
        catalog_rows.resize(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const FormulaEntry* e = entries[i];
            bool corrupt = e->id == config.corrupt_id;
            tasks.push_back([&, i, e, corrupt] {
                catalog_rows[i] = check_catalog_entry(*e, config.n_max, config.m_max, table,
                                                      corrupt);
            });
        }
    }

    std::vector<TheoremCell> cells;
    if (config.run_theorems) {
        for (SumKind kind : {SumKind::G, SumKind::V})
            for (int p = 0; p <= config.pq_max; ++p)
                for (int q = 0; p + q <= config.pq_max; ++q) {
                    if (p + q < 2) continue;
                    for (std::int64_t r = 0; r <= config.rs_max; ++r)
                        for (std::int64_t s = 0; s <= config.rs_max; ++s)
                            for (int m : {1, 2}) cells.push_back({kind, p, q, m, r, s});
                }
    }
    std::vector<CheckRow> oracle_rows(cells.size()), policy_rows(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        tasks.push_back([&, i] {
            check_theorem_cell(cells[i], config.theorem_n_max, table, oracle_rows[i],
                               policy_rows[i]);
        });

    run_pool(tasks, config.parallelism);

    for (auto& r : catalog_rows) report.rows.push_back(std::move(r));
    for (auto& r : oracle_rows) report.rows.push_back(std::move(r));
    for (auto& r : policy_rows) report.rows.push_back(std::move(r));
    for (const auto& r : report.rows)
        if (!r.pass) report.all_pass = false;

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace harmonica
