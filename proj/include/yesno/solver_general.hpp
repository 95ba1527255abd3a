// solver_general.hpp -- codebreaker for boards with more colors than
// positions: k shift-prefix openers (at least k-n of them answer no), then a
// pivot-free binary search per position built from a no-partner prefix.

#pragma once

#include <utility>
#include <vector>

#include "yesno/core.hpp"
#include "yesno/infop.hpp"
#include "yesno/solver_perm.hpp"

namespace yesno {

/// Issue all k shift prefixes. Every color visits every position exactly
/// once across them, so at most n can answer yes; anything else convicts the
/// codemaker.
inline std::vector<Answer> initial_phase_general(Codemaker& maker, const GameParams& params) {
    if (params.colors <= params.positions)
        throw GameError(ErrorKind::Precondition, "general opener needs k > n");
    std::vector<Answer> answers = initial_phase(maker, params);
    int no_count = 0;
    for (Answer a : answers)
        if (!is_yes(a)) ++no_count;
    if (no_count < params.colors - params.positions)
        throw GameError(ErrorKind::InconsistentCodemaker,
                        "fewer than k-n opening queries answered no");
    return answers;
}

/// The pivot-free interval probe: partner-shift colors (all wrong at open
/// positions) on [1..l-1], active-shift colors from l on. Yes means the
/// active shift holds an open match at position l or later. Repetition-free
/// because the two shifts are non-wrapping windows of the same k-cycle.
inline Code build_prefix_mix_probe(int active, int l, const GameParams& params) {
    const int n = params.positions;
    int partner = successor_shift(active, params);
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 1; i < l; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(partner, i, params);
    for (int i = l; i <= n; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(active, i, params);
    return Code(std::move(entries), params);
}

namespace detail {

/// With exactly one position identified, a probe that repeats its color
/// there would cost two real queries through infoP's double-probe case. The
/// spare colors a k > n board always has make that avoidable: any unused
/// color is wrong at an identified position, so swap one in. Truth value is
/// untouched and infoP forwards the probe as-is.
inline Code dodge_single_coincidence(Code probe, const PartialSolution& partial) {
    if (partial.fixed_count() != 1) return probe;
    const GameParams& params = partial.params();
    int pos = partial.fixed_positions().front();
    if (probe.color_at(pos) != partial.color_at(pos)) return probe;
    std::vector<bool> present(static_cast<std::size_t>(params.colors) + 1, false);
    for (int c : probe.entries()) present[static_cast<std::size_t>(c)] = true;
    for (int c = 1; c <= params.colors; ++c) {
        if (!present[static_cast<std::size_t>(c)]) {
            std::vector<int> entries = probe.entries();
            entries[static_cast<std::size_t>(pos - 1)] = c;
            return Code(std::move(entries), params);
        }
    }
    return probe;  // unreachable for k > n
}

}  // namespace detail

/// Binary search over [1..n] for an open match of the active shift; at most
/// ceil(log2 n) infoP calls, each a single real query.
inline int find_next_general(Codemaker& maker, const GameParams& params,
                             const PartialSolution& partial, int active) {
    if (params.colors <= params.positions)
        throw GameError(ErrorKind::Precondition, "pivot-free search needs k > n");
    int a = 1, b = params.positions;
    while (b > a) {
        int l = (a + b + 1) / 2;
        Code probe = detail::dodge_single_coincidence(build_prefix_mix_probe(active, l, params),
                                                      partial);
        if (is_yes(info_p(probe, partial, maker)))
            a = l;
        else
            b = l - 1;
    }
    return a;
}

/// Full k > n codebreaker. Runs the search down to the last open position;
/// with k-n+2 unused colors at the end, a two-candidate closing probe could
/// not always discriminate, but the search keeps working as long as any
/// position is open.
inline SolveResult solve_general(Codemaker& maker, const GameParams& params) {
    if (params.colors <= params.positions)
        throw GameError(ErrorKind::Precondition, "general solver needs k > n");
    if (params.positions < 2)
        throw GameError(ErrorKind::Precondition, "general solver needs n >= 2");

    TranscriptRecorder recorder(maker, params);
    PartialSolution partial(params);

    std::vector<Answer> answers;
    {
        PurposeScope scope(recorder, QueryPurpose::Initial);
        answers = initial_phase_general(recorder, params);
    }

    while (partial.open_count() > 0) {
        int active = detail::require_active_index(answers);
        int pos;
        {
            PurposeScope scope(recorder, QueryPurpose::FindNext);
            pos = find_next_general(recorder, params, partial, active);
        }
        partial.fix(pos, shift_color(active, pos, params));
        if (partial.open_count() > 0) {
            PurposeScope scope(recorder, QueryPurpose::InfopAux);
            Code refresh = detail::dodge_single_coincidence(shift_query(active, params), partial);
            answers[static_cast<std::size_t>(active - 1)] = info_p(refresh, partial, recorder);
        }
    }

    Code secret(partial.entries(), params);
    return SolveResult{std::move(secret), recorder.take_transcript()};
}

}  // namespace yesno
