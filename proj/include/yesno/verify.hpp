// verify.hpp -- the property suite behind the `verify` subcommand: oracle
// equivalence, bound compliance, adversary audits and replay soundness at
// desk scale. The acceptance suite runs the same checks at full scale.

#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "yesno/adversary.hpp"
#include "yesno/bench.hpp"
#include "yesno/rng.hpp"
#include "yesno/solve.hpp"

namespace yesno {

/// Partial solutions consistent with a secret are exactly the fixed-position
/// subsets; enumerate them by bitmask.
inline PartialSolution partial_from_mask(const Code& secret, unsigned mask,
                                         const GameParams& params) {
    PartialSolution partial(params);
    for (int i = 1; i <= secret.size(); ++i)
        if (mask & (1u << (i - 1))) partial.fix(i, secret.color_at(i));
    return partial;
}

namespace detail {

inline int expected_infop_queries(const Code& query, const PartialSolution& partial) {
    int coincidences = 0;
    for (int i = 1; i <= partial.params().positions; ++i)
        if (!partial.is_open(i) && query.color_at(i) == partial.color_at(i)) ++coincidences;
    if (coincidences == 1 && partial.fixed_count() == 1) return 2;
    return 1;
}

/// Check one infoP evaluation against the direct predicate, its query budget
/// and the soundness of whatever auxiliary queries it issued.
inline bool infop_probe_matches(const Code& query, const PartialSolution& partial,
                                const Code& secret, std::string* detail) {
    GameParams params = partial.params();
    HonestCodemaker honest(secret);
    TranscriptRecorder recorder(honest, params);
    Answer derived = info_p(query, partial, recorder);
    Answer truth = open_match_truth(query, partial, secret);
    if (derived != truth) {
        if (detail)
            *detail = "info_p said " + std::string(to_string(derived)) + " for query " +
                      code_to_string(query) + ", secret " + code_to_string(secret);
        return false;
    }
    if (recorder.transcript().total_queries() != expected_infop_queries(query, partial)) {
        if (detail) *detail = "query budget violated for " + code_to_string(query);
        return false;
    }
    // Auxiliary queries must hit no identified position with its own color.
    for (const auto& record : recorder.transcript().records()) {
        if (record.query == query) continue;
        for (int i = 1; i <= params.positions; ++i) {
            bool coincided = query.color_at(i) == partial.color_at(i);
            if (!partial.is_open(i) && coincided &&
                record.query.color_at(i) == partial.color_at(i)) {
                if (detail) *detail = "auxiliary query keeps a coincidence at " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

/// infoP == direct predicate over every secret, every consistent partial and
/// a query sweep: all opening shifts, every pivot-probe and prefix-mix form,
/// plus `random_queries` random codes per (secret, partial) pair.
inline bool check_infop_equivalence(const GameParams& params, int random_queries,
                                    std::uint64_t seed, std::string* detail = nullptr,
                                    long* probes_out = nullptr) {
    const int n = params.positions;
    SeededRng rng(seed);
    long probes = 0;
    for (const Code& secret : enumerate_all_codes(params)) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            PartialSolution partial = partial_from_mask(secret, mask, params);
            std::vector<Code> queries;
            for (int j = 1; j <= params.colors; ++j) queries.push_back(shift_query(j, params));
            if (params.is_permutation_game()) {
                for (int pos : partial.fixed_positions()) {
                    int pivot = partial.color_at(pos);
                    for (int j = 1; j <= n; ++j) {
                        queries.push_back(build_pivot_mode_probe(j, pivot, params));
                        int lj = pivot_position(j, pivot, params);
                        for (int l = 1; l <= lj; ++l)
                            queries.push_back(build_pivot_left_probe(j, pivot, l, params));
                        for (int l = lj % n + 1; l <= n; ++l)
                            queries.push_back(build_pivot_right_probe(j, pivot, l, params));
                    }
                }
                for (int j = 1; j <= n; ++j)
                    for (int l = 2; l <= n; ++l)
                        queries.push_back(detail::rotation_block_probe(j, l - 1, params));
            } else {
                for (int j = 1; j <= params.colors; ++j)
                    for (int l = 2; l <= n; ++l)
                        queries.push_back(build_prefix_mix_probe(j, l, params));
            }
            for (int q = 0; q < random_queries; ++q) queries.push_back(random_code(params, rng));

            for (const Code& query : queries) {
                ++probes;
                if (!detail::infop_probe_matches(query, partial, secret, detail)) return false;
            }
        }
    }
    if (probes_out) *probes_out = probes;
    return true;
}

/// Within the opening family every color visits every position exactly once.
inline bool check_shift_family(const GameParams& params, std::string* detail = nullptr) {
    for (int pos = 1; pos <= params.positions; ++pos) {
        std::vector<bool> seen(static_cast<std::size_t>(params.colors) + 1, false);
        for (int j = 1; j <= params.colors; ++j) {
            int color = shift_query(j, params).color_at(pos);
            if (seen[static_cast<std::size_t>(color)]) {
                if (detail)
                    *detail = "color " + std::to_string(color) + " repeats at position " +
                              std::to_string(pos);
                return false;
            }
            seen[static_cast<std::size_t>(color)] = true;
        }
    }
    return true;
}

/// The lower bound is exactly log2 of the enumerated code space.
inline bool check_lower_bound_enumeration(const GameParams& params,
                                          std::string* detail = nullptr) {
    double enumerated = static_cast<double>(enumerate_all_codes(params).size());
    double bound = lower_bound_queries(params);
    if (std::abs(bound - std::log2(enumerated)) > 1e-9) {
        if (detail) *detail = "bound " + std::to_string(bound) + " vs enumeration";
        return false;
    }
    return true;
}

/// One honest solve checked end to end: right answer, repetition-free
/// queries (the recorder already enforces this; re-checked here), accounting
/// bound, and a transcript that pins the secret as the only consistent code.
inline bool check_one_solve(SolverKind solver, const GameParams& params, const Code& secret,
                            std::string* detail = nullptr, int* queries_out = nullptr) {
    HonestCodemaker maker(secret);
    SolveResult result = solve_with(solver, maker, params);
    if (!(result.secret == secret)) {
        if (detail) *detail = "announced " + code_to_string(result.secret);
        return false;
    }
    for (const auto& record : result.transcript.records()) {
        std::vector<bool> seen(static_cast<std::size_t>(params.colors) + 1, false);
        for (int c : record.query.entries()) {
            if (seen[static_cast<std::size_t>(c)]) {
                if (detail) *detail = "repeated color in query " + code_to_string(record.query);
                return false;
            }
            seen[static_cast<std::size_t>(c)] = true;
        }
    }
    if (result.transcript.total_queries() > accounting_bound_queries(params)) {
        if (detail)
            *detail = std::to_string(result.transcript.total_queries()) + " queries for secret " +
                      code_to_string(secret) + " exceed accounting bound " +
                      std::to_string(accounting_bound_queries(params));
        return false;
    }
    std::vector<Code> consistent = replay_consistent(result.transcript, params, 2);
    if (consistent.size() != 1 || !(consistent.front() == secret)) {
        if (detail)
            *detail = "transcript leaves " + std::to_string(consistent.size()) +
                      " consistent codes for secret " + code_to_string(secret);
        return false;
    }
    if (queries_out) *queries_out = result.transcript.total_queries();
    return true;
}

inline bool check_solver_exhaustive(SolverKind solver, const GameParams& params,
                                    std::string* detail = nullptr, int* max_queries = nullptr) {
    int worst = 0, queries = 0;
    for (const Code& secret : enumerate_all_codes(params)) {
        if (!check_one_solve(solver, params, secret, detail, &queries)) return false;
        worst = std::max(worst, queries);
    }
    if (max_queries) *max_queries = worst;
    return true;
}

inline bool check_solver_random(SolverKind solver, const GameParams& params, int trials,
                                std::uint64_t seed, std::string* detail = nullptr,
                                int* max_queries = nullptr) {
    int worst = 0, queries = 0;
    for (int t = 0; t < trials; ++t) {
        SeededRng rng(seed + static_cast<std::uint64_t>(t));
        if (!check_one_solve(solver, params, random_code(params, rng), detail, &queries))
            return false;
        worst = std::max(worst, queries);
    }
    if (max_queries) *max_queries = worst;
    return true;
}

struct AdversaryAudit {
    int queries_to_singleton = -1;
    int total_queries = 0;
    int forced_minimum = 0;
    bool halving_ok = false;
    bool consistent = false;
    bool announcement_matches = false;
    Code revealed;

    bool all_ok() const {
        return halving_ok && consistent && announcement_matches && queries_to_singleton >= 0 &&
               queries_to_singleton >= forced_minimum;
    }
};

/// Pit a solver against the cheating codemaker and audit the whole session:
/// the set may never shrink below half, the solver cannot finish before
/// ceil(log2 |M0|) queries, and the revealed code must reproduce every
/// answer given.
inline AdversaryAudit audit_adversary_session(SolverKind solver, const GameParams& params,
                                              std::uint64_t budget = 10'000'000) {
    AdversaryCodemaker adversary(params, budget);
    SolveResult result = solve_with(solver, adversary, params);
    const CandidateSet& set = adversary.candidates();

    AdversaryAudit audit;
    audit.total_queries = result.transcript.total_queries();
    audit.forced_minimum = static_cast<int>(std::ceil(min_queries_certificate(params) - 1e-9));

    const std::vector<std::size_t>& history = set.size_history();
    audit.halving_ok = true;
    for (std::size_t i = 0; i + 1 < history.size(); ++i)
        audit.halving_ok = audit.halving_ok && history[i] <= 2 * history[i + 1];
    for (std::size_t i = 0; i < history.size(); ++i) {
        if (history[i] == 1) {
            audit.queries_to_singleton = static_cast<int>(i);
            break;
        }
    }

    audit.revealed = set.reveal(result.secret);
    audit.announcement_matches = audit.revealed == result.secret;
    audit.consistent = true;
    for (const auto& record : result.transcript.records())
        audit.consistent =
            audit.consistent && info(record.query, audit.revealed) == record.answer;
    return audit;
}

/// Desk-scale verification run; one line per check.
inline bool run_verification(std::ostream& out) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    std::string detail;
    long probes = 0;
    bool ok = check_infop_equivalence(GameParams(4, 4), 40, 20240, &detail, &probes);
    add("infop equivalence, n=4 exhaustive (" + std::to_string(probes) + " probes)", ok, detail);

    detail.clear();
    add("shift family completeness, n=7 k=7", check_shift_family(GameParams(7, 7), &detail), detail);
    detail.clear();
    add("shift family completeness, n=5 k=9", check_shift_family(GameParams(5, 9), &detail), detail);
    detail.clear();
    add("lower bound equals enumerated entropy, n=4 k=6",
        check_lower_bound_enumeration(GameParams(4, 6), &detail), detail);

    detail.clear();
    int max_q = 0;
    ok = check_solver_exhaustive(SolverKind::Perm, GameParams(5, 5), &detail, &max_q);
    add("permutation solver exhaustive, n=5 (max " + std::to_string(max_q) + " queries)", ok,
        detail);
    detail.clear();
    ok = check_solver_exhaustive(SolverKind::General, GameParams(3, 5), &detail, &max_q);
    add("general solver exhaustive, n=3 k=5 (max " + std::to_string(max_q) + " queries)", ok,
        detail);
    detail.clear();
    ok = check_solver_random(SolverKind::Perm, GameParams(16, 16), 25, 7, &detail, &max_q);
    add("permutation solver random, n=16 (max " + std::to_string(max_q) + " queries)", ok, detail);
    detail.clear();
    ok = check_solver_random(SolverKind::General, GameParams(8, 12), 25, 7, &detail, &max_q);
    add("general solver random, n=8 k=12 (max " + std::to_string(max_q) + " queries)", ok, detail);

    for (int n = 2; n <= 5; ++n) {
        AdversaryAudit audit = audit_adversary_session(SolverKind::Perm, GameParams(n, n));
        add("adversary forcing vs perm solver, n=" + std::to_string(n) + " (" +
                std::to_string(audit.queries_to_singleton) + " >= " +
                std::to_string(audit.forced_minimum) + ")",
            audit.all_ok());
        audit = audit_adversary_session(SolverKind::Greedy, GameParams(n, n));
        add("adversary forcing vs greedy solver, n=" + std::to_string(n) + " (" +
                std::to_string(audit.queries_to_singleton) + " >= " +
                std::to_string(audit.forced_minimum) + ")",
            audit.all_ok());
    }

    bool all_pass = true;
    for (const Check& check : checks) {
        out << (check.pass ? "[PASS] " : "[FAIL] ") << check.name;
        if (!check.pass && !check.detail.empty()) out << " -- " << check.detail;
        out << "\n";
        all_pass = all_pass && check.pass;
    }
    out << (all_pass ? "verification passed\n" : "verification FAILED\n");
    return all_pass;
}

}  // namespace yesno
