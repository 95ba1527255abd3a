// bench.hpp -- query-count sweeps compared against the bound formulas.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "yesno/rng.hpp"
#include "yesno/solve.hpp"

namespace yesno {

/// One benchmark line: measured query-count statistics next to the proven
/// bound, the per-step accounting bound and the information-theoretic floor.
/// bound_theorem is NaN on permutation boards below n = 4, where the
/// expression has no meaning.
struct BenchRow {
    int n = 0;
    int k = 0;
    int trials = 0;
    int min_q = 0;
    double mean_q = 0.0;
    int max_q = 0;
    double bound_theorem = std::numeric_limits<double>::quiet_NaN();
    double bound_accounting = 0.0;
    double lower_bound = 0.0;
};

inline const char* bench_csv_header() noexcept {
    return "n,k,trials,min_q,mean_q,max_q,bound_theorem,bound_accounting,lower_bound";
}

namespace detail {

inline std::string fixed4(double value) {
    if (std::isnan(value)) return "";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

}  // namespace detail

inline std::string bench_row_csv(const BenchRow& row) {
    return std::to_string(row.n) + "," + std::to_string(row.k) + "," +
           std::to_string(row.trials) + "," + std::to_string(row.min_q) + "," +
           detail::fixed4(row.mean_q) + "," + std::to_string(row.max_q) + "," +
           detail::fixed4(row.bound_theorem) + "," + detail::fixed4(row.bound_accounting) + "," +
           detail::fixed4(row.lower_bound);
}

inline std::string bench_row_json_line(const BenchRow& row) {
    std::string theorem = std::isnan(row.bound_theorem)
                              ? "null"
                              : detail::fixed4(row.bound_theorem);
    return std::string("{\"n\":") + std::to_string(row.n) + ",\"k\":" + std::to_string(row.k) +
           ",\"trials\":" + std::to_string(row.trials) + ",\"min_q\":" + std::to_string(row.min_q) +
           ",\"mean_q\":" + detail::fixed4(row.mean_q) + ",\"max_q\":" + std::to_string(row.max_q) +
           ",\"bound_theorem\":" + theorem +
           ",\"bound_accounting\":" + detail::fixed4(row.bound_accounting) +
           ",\"lower_bound\":" + detail::fixed4(row.lower_bound) + "}";
}

/// Solve one honest instance and hand back the measured query count.
inline int measure_solve(SolverKind solver, const GameParams& params, const Code& secret) {
    HonestCodemaker maker(secret);
    SolveResult result = solve_with(solver, maker, params);
    if (!(result.secret == secret))
        throw GameError(ErrorKind::InconsistentCodemaker,
                        "solver announced " + code_to_string(result.secret) + " for secret " +
                            code_to_string(secret));
    return result.transcript.total_queries();
}

/// Run one (n, k) cell. Exhaustive mode enumerates every secret (bounded by
/// `exhaustive_budget`); random mode derives the trial seed as seed + index.
// TODO: trials are independent sessions; fan them out over a thread pool
// and aggregate by trial index if sweeps much beyond n=128 are ever needed.
inline BenchRow run_bench_row(const GameParams& params, SolverKind solver, int trials,
                              bool exhaustive, std::uint64_t seed,
                              std::uint64_t exhaustive_budget = 100'000) {
    BenchRow row;
    row.n = params.positions;
    row.k = params.colors;

    long long total = 0;
    int count = 0;
    auto record = [&](int queries) {
        if (count == 0) {
            row.min_q = row.max_q = queries;
        } else {
            row.min_q = std::min(row.min_q, queries);
            row.max_q = std::max(row.max_q, queries);
        }
        total += queries;
        ++count;
    };

    if (exhaustive) {
        for (const Code& secret : enumerate_all_codes(params, exhaustive_budget))
            record(measure_solve(solver, params, secret));
    } else {
        for (int t = 0; t < trials; ++t) {
            SeededRng rng(seed + static_cast<std::uint64_t>(t));
            record(measure_solve(solver, params, random_code(params, rng)));
        }
    }

    row.trials = count;
    row.mean_q = count > 0 ? static_cast<double>(total) / count : 0.0;
    if (!params.is_permutation_game() || params.positions >= 4)
        row.bound_theorem = upper_bound_queries(params);
    row.bound_accounting = static_cast<double>(accounting_bound_queries(params));
    row.lower_bound = lower_bound_queries(params);
    return row;
}

}  // namespace yesno
