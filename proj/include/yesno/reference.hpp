// reference.hpp -- independent ground-truth oracles: the direct open-match
// predicate, exact transcript replay, and a consistent-set greedy solver.
// Everything here is computed from raw info semantics, never through the
// solver machinery it is used to check.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "yesno/core.hpp"
#include "yesno/infop.hpp"

namespace yesno {

/// Direct evaluation of "query hits a correct open position", for tests and
/// replay only. Throws if the partial solution contradicts the secret.
inline Answer open_match_truth(const Code& query, const PartialSolution& partial,
                               const Code& secret) {
    const GameParams& params = partial.params();
    for (int i = 1; i <= params.positions; ++i)
        if (!partial.is_open(i) && partial.color_at(i) != secret.color_at(i))
            throw GameError(ErrorKind::InconsistentPartial,
                            "partial names color " + std::to_string(partial.color_at(i)) +
                                " at position " + std::to_string(i) +
                                " but the secret has " + std::to_string(secret.color_at(i)));
    for (int i = 1; i <= params.positions; ++i)
        if (partial.is_open(i) && query.color_at(i) == secret.color_at(i)) return Answer::Yes;
    return Answer::No;
}

// ---------------------------------------------------------------------------
// Transcript replay
// ---------------------------------------------------------------------------

/// Exact model of the codes consistent with a set of (query, answer) pairs.
///
/// A no-answer excludes the query's color at every position. A yes-answer
/// becomes a disjunction: at least one of the query's (position, color)
/// pairs holds. Constraint propagation (exclusions, forced assignments,
/// distinct colors, collapsed disjunctions) runs to a fixpoint and a
/// count-limited backtracking search settles whatever remains, so the result
/// is exact without enumerating the code space.
class ConsistencyReplay {
public:
    explicit ConsistencyReplay(const GameParams& params) : params_(params) {}

    void add_observation(const Code& query, Answer answer) {
        observations_.emplace_back(query, answer);
    }

    /// Consistent codes in ascending order, at most `max_results` of them.
    /// An empty result means the answers contradict each other.
    std::vector<Code> solutions(std::size_t max_results) const {
        if (max_results == 0) return {};
        const int n = params_.positions;
        const int k = params_.colors;

        // Yes-answers become clauses; no-answers seed the exclusion matrix.
        std::vector<std::vector<std::pair<int, int>>> clauses;
        std::vector<std::pair<int, int>> no_pairs;
        for (const auto& [query, answer] : observations_) {
            if (is_yes(answer)) {
                std::vector<std::pair<int, int>> options;
                options.reserve(static_cast<std::size_t>(n));
                for (int i = 1; i <= n; ++i) options.emplace_back(i, query.color_at(i));
                clauses.push_back(std::move(options));
            } else {
                for (int i = 1; i <= n; ++i) no_pairs.emplace_back(i, query.color_at(i));
            }
        }

        std::vector<std::vector<int>> occurrences(static_cast<std::size_t>(n) *
                                                  static_cast<std::size_t>(k));
        for (std::size_t c = 0; c < clauses.size(); ++c)
            for (auto [pos, color] : clauses[c])
                occurrences[cell(pos, color)].push_back(static_cast<int>(c));

        State root;
        root.excluded.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
        root.assigned.assign(static_cast<std::size_t>(n) + 1, 0);
        root.avail.assign(static_cast<std::size_t>(n) + 1, k);
        root.color_positions.assign(static_cast<std::size_t>(k) + 1, n);
        root.alive.assign(clauses.size(), 0);
        root.satisfied.assign(clauses.size(), 0);
        for (std::size_t c = 0; c < clauses.size(); ++c)
            root.alive[c] = static_cast<int>(clauses[c].size());
        root.unassigned = n;

        Context ctx{params_, clauses, occurrences};
        for (auto [pos, color] : no_pairs) {
            exclude(ctx, root, pos, color);
            if (root.contradiction) return {};
        }
        drain(ctx, root);
        if (root.contradiction) return {};

        std::vector<Code> results;
        search(ctx, root, results, max_results);
        std::sort(results.begin(), results.end());
        return results;
    }

private:
    struct State {
        std::vector<char> excluded;
        std::vector<int> assigned;         // per position, 0 = none
        std::vector<int> avail;            // per position, colors still possible
        std::vector<int> color_positions;  // per color, positions still possible
        std::vector<int> alive;            // per clause, options not yet excluded
        std::vector<char> satisfied;
        std::vector<std::pair<int, int>> queue;
        int unassigned = 0;
        bool contradiction = false;
    };

    struct Context {
        const GameParams& params;
        const std::vector<std::vector<std::pair<int, int>>>& clauses;
        const std::vector<std::vector<int>>& occurrences;
    };

    std::size_t cell(int pos, int color) const {
        return static_cast<std::size_t>(pos - 1) * static_cast<std::size_t>(params_.colors) +
               static_cast<std::size_t>(color - 1);
    }

    static void exclude(const Context& ctx, State& s, int pos, int color) {
        const int k = ctx.params.colors;
        std::size_t idx = static_cast<std::size_t>(pos - 1) * static_cast<std::size_t>(k) +
                          static_cast<std::size_t>(color - 1);
        if (s.excluded[idx]) return;
        if (s.assigned[static_cast<std::size_t>(pos)] == color) {
            s.contradiction = true;
            return;
        }
        s.excluded[idx] = 1;

        if (--s.avail[static_cast<std::size_t>(pos)] == 0) {
            s.contradiction = true;
            return;
        }
        if (s.avail[static_cast<std::size_t>(pos)] == 1 &&
            s.assigned[static_cast<std::size_t>(pos)] == 0) {
            for (int c = 1; c <= k; ++c) {
                std::size_t i = static_cast<std::size_t>(pos - 1) * static_cast<std::size_t>(k) +
                                static_cast<std::size_t>(c - 1);
                if (!s.excluded[i]) {
                    s.queue.emplace_back(pos, c);
                    break;
                }
            }
        }

        // Every color must be placed somewhere only on permutation boards.
        if (ctx.params.is_permutation_game()) {
            if (--s.color_positions[static_cast<std::size_t>(color)] == 0) {
                s.contradiction = true;
                return;
            }
            if (s.color_positions[static_cast<std::size_t>(color)] == 1) {
                for (int p = 1; p <= ctx.params.positions; ++p) {
                    std::size_t i = static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(k) +
                                    static_cast<std::size_t>(color - 1);
                    if (!s.excluded[i]) {
                        if (s.assigned[static_cast<std::size_t>(p)] != color)
                            s.queue.emplace_back(p, color);
                        break;
                    }
                }
            }
        }

        for (int cid : ctx.occurrences[idx]) {
            auto c = static_cast<std::size_t>(cid);
            if (s.satisfied[c]) continue;
            if (--s.alive[c] == 0) {
                s.contradiction = true;
                return;
            }
            if (s.alive[c] == 1) {
                for (auto [p, col] : ctx.clauses[c]) {
                    std::size_t i = static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(k) +
                                    static_cast<std::size_t>(col - 1);
                    if (!s.excluded[i]) {
                        s.queue.emplace_back(p, col);
                        break;
                    }
                }
            }
        }
    }

    static void assign(const Context& ctx, State& s, int pos, int color) {
        const int k = ctx.params.colors;
        if (s.assigned[static_cast<std::size_t>(pos)] == color) return;
        if (s.assigned[static_cast<std::size_t>(pos)] != 0) {
            s.contradiction = true;
            return;
        }
        std::size_t idx = static_cast<std::size_t>(pos - 1) * static_cast<std::size_t>(k) +
                          static_cast<std::size_t>(color - 1);
        if (s.excluded[idx]) {
            s.contradiction = true;
            return;
        }
        s.assigned[static_cast<std::size_t>(pos)] = color;
        --s.unassigned;
        for (int cid : ctx.occurrences[idx]) s.satisfied[static_cast<std::size_t>(cid)] = 1;
        for (int c = 1; c <= k; ++c) {
            if (c == color) continue;
            exclude(ctx, s, pos, c);
            if (s.contradiction) return;
        }
        for (int p = 1; p <= ctx.params.positions; ++p) {
            if (p == pos) continue;
            exclude(ctx, s, p, color);
            if (s.contradiction) return;
        }
    }

    static void drain(const Context& ctx, State& s) {
        while (!s.queue.empty() && !s.contradiction) {
            auto [pos, color] = s.queue.back();
            s.queue.pop_back();
            assign(ctx, s, pos, color);
        }
    }

    void search(const Context& ctx, const State& s, std::vector<Code>& results,
                std::size_t max_results) const {
        if (results.size() >= max_results) return;
        if (s.unassigned == 0) {
            std::vector<int> entries(static_cast<std::size_t>(params_.positions));
            for (int p = 1; p <= params_.positions; ++p)
                entries[static_cast<std::size_t>(p - 1)] = s.assigned[static_cast<std::size_t>(p)];
            Code candidate(std::move(entries), params_);
            for (const auto& [query, answer] : observations_)
                if (info(query, candidate) != answer) return;
            results.push_back(std::move(candidate));
            return;
        }

        int pick = 0, best = std::numeric_limits<int>::max();
        for (int p = 1; p <= params_.positions; ++p) {
            if (s.assigned[static_cast<std::size_t>(p)] != 0) continue;
            if (s.avail[static_cast<std::size_t>(p)] < best) {
                best = s.avail[static_cast<std::size_t>(p)];
                pick = p;
            }
        }
        for (int c = 1; c <= params_.colors; ++c) {
            if (s.excluded[cell(pick, c)]) continue;
            State child = s;
            child.queue.emplace_back(pick, c);
            drain(ctx, child);
            if (!child.contradiction) search(ctx, child, results, max_results);
            if (results.size() >= max_results) return;
        }
    }

    GameParams params_;
    std::vector<std::pair<Code, Answer>> observations_;
};

/// Codes consistent with every recorded query under raw info semantics.
/// `max_results` caps the search; the acceptance checks ask for 2 to decide
/// "exactly one" without materializing anything bigger.
inline std::vector<Code> replay_consistent(const Transcript& transcript, const GameParams& params,
                                           std::size_t max_results = 2) {
    ConsistencyReplay replay(params);
    for (const auto& record : transcript.records())
        replay.add_observation(record.query, record.answer);
    return replay.solutions(max_results);
}

/// Brute-force twin of replay_consistent for boards small enough to
/// enumerate; cross-checks the propagation engine in tests.
inline std::vector<Code> replay_consistent_brute(const Transcript& transcript,
                                                 const GameParams& params,
                                                 std::uint64_t budget = 1'000'000) {
    std::vector<Code> out;
    for (const Code& candidate : enumerate_all_codes(params, budget)) {
        bool ok = true;
        for (const auto& record : transcript.records()) {
            if (info(record.query, candidate) != record.answer) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(candidate);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Greedy reference solver
// ---------------------------------------------------------------------------

/// Splitting solver for small boards: always asks the repetition-free query
/// that divides the current consistent set most evenly (ties to the
/// lexicographically smallest query), until one code remains. Used as the
/// n <= 3 fallback and as a second, strategy-independent player against the
/// adversary.
inline SolveResult greedy_small_solve(Codemaker& maker, const GameParams& params,
                                      std::uint64_t budget = 1'000'000) {
    std::vector<Code> pool = enumerate_all_codes(params, budget);
    TranscriptRecorder recorder(maker, params);
    recorder.set_purpose(QueryPurpose::FindNext);

    std::vector<std::size_t> consistent(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) consistent[i] = i;

    const int n = params.positions;
    const int k = params.colors;
    while (consistent.size() > 1) {
        // Bitmask of consistent members holding each (position, color) pair;
        // a query's yes-side is the union over its pairs.
        std::size_t words = (consistent.size() + 63) / 64;
        std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) *
                                             static_cast<std::size_t>(k) * words,
                                         0);
        for (std::size_t m = 0; m < consistent.size(); ++m) {
            const Code& member = pool[consistent[m]];
            for (int i = 1; i <= n; ++i) {
                std::size_t base = (static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(k) +
                                    static_cast<std::size_t>(member.color_at(i) - 1)) *
                                   words;
                masks[base + m / 64] |= std::uint64_t(1) << (m % 64);
            }
        }

        std::vector<std::uint64_t> acc(words);
        std::size_t best_index = pool.size();
        std::size_t best_imbalance = std::numeric_limits<std::size_t>::max();
        for (std::size_t q = 0; q < pool.size(); ++q) {
            std::fill(acc.begin(), acc.end(), 0);
            const Code& query = pool[q];
            for (int i = 1; i <= n; ++i) {
                std::size_t base = (static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(k) +
                                    static_cast<std::size_t>(query.color_at(i) - 1)) *
                                   words;
                for (std::size_t w = 0; w < words; ++w) acc[w] |= masks[base + w];
            }
            std::size_t yes = 0;
            for (std::size_t w = 0; w < words; ++w)
                yes += static_cast<std::size_t>(std::popcount(acc[w]));
            if (yes == 0 || yes == consistent.size()) continue;  // uninformative
            std::size_t imbalance =
                yes * 2 > consistent.size() ? yes * 2 - consistent.size() : consistent.size() - yes * 2;
            if (imbalance < best_imbalance) {
                best_imbalance = imbalance;
                best_index = q;
            }
        }
        if (best_index == pool.size())
            throw GameError(ErrorKind::InconsistentCodemaker,
                            "no query separates the remaining candidates");

        const Code& query = pool[best_index];
        Answer answer = recorder.respond(query);
        std::vector<std::size_t> kept;
        kept.reserve(consistent.size());
        for (std::size_t idx : consistent)
            if (info(query, pool[idx]) == answer) kept.push_back(idx);
        if (kept.empty())
            throw GameError(ErrorKind::InconsistentCodemaker,
                            "answers rule out every remaining candidate");
        consistent.swap(kept);
    }

    return SolveResult{pool[consistent.front()], recorder.take_transcript()};
}

}  // namespace yesno
