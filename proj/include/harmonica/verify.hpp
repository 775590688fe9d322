#pragma once

#include "harmonica/catalog.hpp"
#include "harmonica/recursion.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace harmonica {

struct SweepConfig {
    std::int64_t n_max = 100;       // catalog sweep: n in [0, n_max]
    int m_max = 8;                  // m sweep bound for parameterized entries
    int pq_max = 4;                 // theorem grid: p+q in [2, pq_max]
    std::int64_t rs_max = 3;        // theorem grid: r, s in [0, rs_max]
    std::int64_t theorem_n_max = 50;
    int parallelism = 1;
    std::optional<Family> family;   // catalog suite filter
    std::string corrupt_id;        // fixture: perturb this entry's closed form
    bool run_catalog = true;
    bool run_theorems = true;
};

struct CheckRow {
    std::string suite; // catalog_vs_oracle | recursion_vs_oracle | base_policy_independence
    std::string id;    // formula id, or theorem cell description
    std::string checked_range;
    bool pass = true;
    // first failure, when !pass
    std::int64_t fail_n = -1;
    int fail_m = 0;
    std::int64_t fail_r = 0;
    std::string lhs, rhs;
};

struct VerifyReport {
    SweepConfig config;
    std::vector<CheckRow> rows;
    bool all_pass = true;
    double seconds = 0.0;

    const CheckRow* first_failure() const {
        for (const auto& r : rows)
            if (!r.pass) return &r;
        return nullptr;
    }
};

// Runs the requested suites over a shared read-only table. Work is
// partitioned per entry / theorem cell across `parallelism` workers and
// merged back in deterministic order.
VerifyReport run_verification(const SweepConfig& config);

// Per-entry sweep of the catalog's defining contract
// closed_form == direct_eval over [max(0, n_min), n_max] and the entry's
// parameter domain. `corrupt` perturbs the closed form (negative control).
CheckRow check_catalog_entry(const FormulaEntry& entry, std::int64_t n_max, int m_sweep_max,
                             const HarmonicTable& table, bool corrupt = false);

} // namespace harmonica
