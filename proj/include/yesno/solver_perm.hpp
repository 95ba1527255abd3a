// solver_perm.hpp -- deterministic codebreaker for the permutation game
// (k = n): n circular-shift openers, one first fix, then a pivot-color
// binary search per remaining position, two open positions resolved at the
// end by a single candidate probe.

#pragma once

#include <utility>
#include <vector>

#include "yesno/core.hpp"
#include "yesno/infop.hpp"
#include "yesno/reference.hpp"

namespace yesno {

/// Issue each opening shift once and collect the raw answers. Answer j says
/// whether shift j names some secret color at its position.
inline std::vector<Answer> initial_phase(Codemaker& maker, const GameParams& params) {
    std::vector<Answer> answers;
    answers.reserve(static_cast<std::size_t>(params.colors));
    for (int j = 1; j <= params.colors; ++j)
        answers.push_back(maker.respond(shift_query(j, params)));
    return answers;
}

/// Smallest index j whose answer is yes while its cyclic successor's is no;
/// the anchor of every binary search.
inline int choose_active_index(const std::vector<Answer>& answers) {
    int count = static_cast<int>(answers.size());
    for (int j = 1; j <= count; ++j) {
        int r = j % count + 1;
        if (is_yes(answers[static_cast<std::size_t>(j - 1)]) &&
            !is_yes(answers[static_cast<std::size_t>(r - 1)]))
            return j;
    }
    throw GameError(ErrorKind::NoActiveIndex, "answers are all yes or all no");
}

namespace detail {

/// Inside a solver run an active index provably exists; its absence convicts
/// the codemaker.
inline int require_active_index(const std::vector<Answer>& answers) {
    try {
        return choose_active_index(answers);
    } catch (const GameError&) {
        throw GameError(ErrorKind::InconsistentCodemaker,
                        "no active opener remains; the answers are inconsistent");
    }
}

}  // namespace detail

/// Position of `color` in shift j.
inline int pivot_position(int shift, int color, const GameParams& params) {
    int r = (color + shift - 2) % params.colors;
    return r + 1;
}

namespace detail {

inline Code shift_with_swap(int shift, int a, int b, const GameParams& params) {
    std::vector<int> entries = shift_query(shift, params).entries();
    std::swap(entries[static_cast<std::size_t>(a - 1)], entries[static_cast<std::size_t>(b - 1)]);
    return Code(std::move(entries), params);
}

}  // namespace detail

/// First fix when every opening query answered yes: each opener then has
/// exactly one match, and the identity's match sits at the unique m with
/// y_m = m. Pair-swapped identities locate the pair holding m (the only
/// swap that can answer no), one more swap splits the pair. At most
/// floor(n/2)+1 queries.
inline std::pair<int, int> find_first_all_yes(Codemaker& maker, const GameParams& params) {
    const int n = params.positions;
    for (int t = 1; 2 * t <= n; ++t) {
        int left = 2 * t - 1, right = 2 * t;
        if (is_yes(maker.respond(detail::shift_with_swap(1, left, right, params)))) continue;
        // m is left or right; move `right`'s color elsewhere and re-test.
        int outside = (left > 1) ? 1 : right + 1;
        Answer probe = maker.respond(detail::shift_with_swap(1, right, outside, params));
        int m = is_yes(probe) ? left : right;
        return {m, m};
    }
    // Every pair answered yes; with n odd the match is the leftover position.
    if (n % 2 == 0)
        throw GameError(ErrorKind::InconsistentCodemaker,
                        "all pair swaps answered yes on an even board");
    return {n, n};
}

/// One identified entry produced by the mixed-answers first fix. The entry
/// may come from a shift other than the active one, so the owner comes along
/// for the caller's bookkeeping refresh.
struct FirstFix {
    int position = 0;
    int color = 0;
    int owner = 0;  // shift whose query holds this (position, color) pair
};

namespace detail {

/// Probe for the pivot-free first fix: active-shift colors on [1..l], the
/// wrap color at l+1, partner-shift colors (all known wrong) after. Yes
/// means the active shift matches within [1..l] or the secret has the wrap
/// color at l+1.
inline Code rotation_block_probe(int active, int l, const GameParams& params) {
    const int n = params.positions;
    int partner = successor_shift(active, params);
    int wrap_color = shift_color(active, n, params);
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 1; i <= l; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(active, i, params);
    entries[static_cast<std::size_t>(l)] = wrap_color;
    for (int i = l + 2; i <= n; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(partner, i, params);
    return Code(std::move(entries), params);
}

}  // namespace detail

/// First fix when the opening answers are mixed and nothing is identified
/// yet. With no pivot color available this runs a pivot-free boundary search
/// over rotation-block probes: the no/yes boundary leaves two candidate
/// entries, and one swapped partner query separates them (both candidates
/// carry the same color, so a permutation secret cannot satisfy the stray
/// reading and the candidate simultaneously). ceil(log2(n-1)) + 1 queries.
inline FirstFix find_first_no_pivot(Codemaker& maker, const GameParams& params, int active) {
    const int n = params.positions;
    int partner = successor_shift(active, params);
    int wrap_color = shift_color(active, n, params);

    // Probe l=0 is the partner shift (answered no), l=n-1 the active shift
    // (answered yes); neither needs re-asking.
    int lo = 0, hi = n - 1;
    while (hi - lo > 1) {
        int mid = (lo + hi) / 2;
        if (is_yes(maker.respond(detail::rotation_block_probe(active, mid, params))))
            hi = mid;
        else
            lo = mid;
    }

    // Either the active shift matches at hi, or the secret has the wrap
    // color at hi+1.
    int candidate_color = shift_color(active, hi, params);
    Answer stray;
    if (hi >= 2) {
        // Partner shift with positions 1 and hi+1 swapped: reads the wrap
        // color at hi+1 and the candidate color at position 1.
        stray = maker.respond(detail::shift_with_swap(partner, 1, hi + 1, params));
    } else {
        // hi = 1: position 1 is the candidate itself; rotate three partner
        // entries so the candidate color is read at position 3 instead.
        std::vector<int> entries = shift_query(partner, params).entries();
        entries[0] = shift_color(partner, 3, params);
        entries[1] = wrap_color;
        entries[2] = shift_color(partner, 2, params);
        stray = maker.respond(Code(std::move(entries), params));
    }
    if (is_yes(stray)) {
        int pos = hi + 1;
        return {pos, wrap_color, owner_shift(pos, wrap_color, params)};
    }
    return {hi, candidate_color, active};
}

// ---------------------------------------------------------------------------
// Pivot-color binary search (the k = n findNext)
// ---------------------------------------------------------------------------

/// Mode probe: the pivot color up front, the active shift's other entries in
/// order. A no means every open match of the active shift sits at or before
/// the pivot's position in it.
inline Code build_pivot_mode_probe(int active, int pivot_color, const GameParams& params) {
    const int n = params.positions;
    int lj = pivot_position(active, pivot_color, params);
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));
    entries.push_back(pivot_color);
    for (int i = 1; i <= n; ++i)
        if (i != lj) entries.push_back(shift_color(active, i, params));
    return Code(std::move(entries), params);
}

/// Left-mode interval probe: active shift on [1..l-1], pivot at l, partner
/// entries (wrong) up to the pivot's slot, active tail beyond it. Yes means
/// an open match lies in [1..l-1].
inline Code build_pivot_left_probe(int active, int pivot_color, int l, const GameParams& params) {
    const int n = params.positions;
    int partner = successor_shift(active, params);
    int lj = pivot_position(active, pivot_color, params);
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 1; i < l; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(active, i, params);
    entries[static_cast<std::size_t>(l - 1)] = pivot_color;
    for (int i = l + 1; i <= lj; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(partner, i, params);
    for (int i = lj + 1; i <= n; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(active, i, params);
    return Code(std::move(entries), params);
}

/// Right-mode interval probe: partner prefix (wrong), active shift from the
/// partner's pivot slot up to l-1, pivot at l, partner tail. Yes means an
/// open match lies in [l_r..l-1].
inline Code build_pivot_right_probe(int active, int pivot_color, int l, const GameParams& params) {
    const int n = params.positions;
    int partner = successor_shift(active, params);
    int lr = pivot_position(partner, pivot_color, params);
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 1; i < lr; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(partner, i, params);
    for (int i = lr; i < l; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(active, i, params);
    entries[static_cast<std::size_t>(l - 1)] = pivot_color;
    for (int i = l + 1; i <= n; ++i)
        entries[static_cast<std::size_t>(i - 1)] = shift_color(partner, i, params);
    return Code(std::move(entries), params);
}

/// Binary search for an open match of the active shift, steered by an
/// already-identified pivot color. At most 1 + ceil(log2 n) infoP calls;
/// each call is one real query once two or more positions are fixed.
inline int find_next(Codemaker& maker, const GameParams& params, const PartialSolution& partial,
                     int active) {
    if (partial.fixed_count() < 1)
        throw GameError(ErrorKind::Precondition, "findNext needs an identified pivot color");
    const int n = params.positions;
    int pivot_color = partial.color_at(partial.fixed_positions().front());
    int lj = pivot_position(active, pivot_color, params);
    int lr = lj % n + 1;  // pivot slot in the partner shift

    bool search_left;
    if (lj == n)
        search_left = true;
    else
        search_left = !is_yes(info_p(build_pivot_mode_probe(active, pivot_color, params),
                                     partial, maker));

    int a = search_left ? 1 : lr;
    int b = search_left ? lj : n;
    while (b > a) {
        int l = (a + b + 1) / 2;
        Code probe = search_left ? build_pivot_left_probe(active, pivot_color, l, params)
                                 : build_pivot_right_probe(active, pivot_color, l, params);
        if (is_yes(info_p(probe, partial, maker)))
            b = l - 1;
        else
            a = l;
    }
    if (b < 1 || b > n)
        throw GameError(ErrorKind::InconsistentCodemaker, "binary search left its interval");
    return b;
}

/// Two open positions, two unused colors: probe the candidate that pairs
/// them in order. Since the secret is a permutation, either both placements
/// are right or both are swapped.
inline Code resolve_final_pair(Codemaker& maker, const GameParams& params,
                               const PartialSolution& partial) {
    if (partial.open_count() != 2)
        throw GameError(ErrorKind::Precondition, "final resolution needs exactly two open positions");
    std::vector<int> open = partial.open_positions();
    std::vector<int> colors = partial.unused_colors();

    std::vector<int> entries = partial.entries();
    entries[static_cast<std::size_t>(open[0] - 1)] = colors[0];
    entries[static_cast<std::size_t>(open[1] - 1)] = colors[1];
    Code candidate(std::move(entries), params);
    if (is_yes(info_p(candidate, partial, maker))) return candidate;

    std::vector<int> swapped = partial.entries();
    swapped[static_cast<std::size_t>(open[0] - 1)] = colors[1];
    swapped[static_cast<std::size_t>(open[1] - 1)] = colors[0];
    return Code(std::move(swapped), params);
}

/// Full permutation-game codebreaker. Boards below n = 4 go to the greedy
/// reference solver; the shift machinery has nothing to offer them.
inline SolveResult solve_permutation(Codemaker& maker, const GameParams& params) {
    if (!params.is_permutation_game())
        throw GameError(ErrorKind::Precondition, "permutation solver needs k = n");
    if (params.positions <= 3) return greedy_small_solve(maker, params);

    TranscriptRecorder recorder(maker, params);
    PartialSolution partial(params);

    std::vector<Answer> answers;
    {
        PurposeScope scope(recorder, QueryPurpose::Initial);
        answers = initial_phase(recorder, params);
    }

    bool all_yes = true;
    for (Answer a : answers) all_yes = all_yes && is_yes(a);

    if (all_yes) {
        PurposeScope scope(recorder, QueryPurpose::FirstFix);
        auto [pos, color] = find_first_all_yes(recorder, params);
        partial.fix(pos, color);
        // The identity's single match is now fixed; no query needed.
        answers[0] = Answer::No;
    } else {
        int active = detail::require_active_index(answers);
        FirstFix fix;
        {
            PurposeScope scope(recorder, QueryPurpose::FirstFix);
            fix = find_first_no_pivot(recorder, params, active);
        }
        partial.fix(fix.position, fix.color);
        PurposeScope scope(recorder, QueryPurpose::InfopAux);
        answers[static_cast<std::size_t>(fix.owner - 1)] =
            info_p(shift_query(fix.owner, params), partial, recorder);
    }

    while (partial.open_count() > 2) {
        int active = detail::require_active_index(answers);
        int pos;
        {
            PurposeScope scope(recorder, QueryPurpose::FindNext);
            pos = find_next(recorder, params, partial, active);
        }
        partial.fix(pos, shift_color(active, pos, params));
        PurposeScope scope(recorder, QueryPurpose::InfopAux);
        answers[static_cast<std::size_t>(active - 1)] =
            info_p(shift_query(active, params), partial, recorder);
    }

    Code secret = [&] {
        PurposeScope scope(recorder, QueryPurpose::Final);
        return resolve_final_pair(recorder, params, partial);
    }();
    return SolveResult{std::move(secret), recorder.take_transcript()};
}

}  // namespace yesno
