// infop.hpp -- the derived oracle: does a query hit a correct position that
// is still open in the partial solution? Realized with one or two real
// queries that blank out every coincidence with the partial solution.

#pragma once

#include <utility>
#include <vector>

#include "yesno/core.hpp"

namespace yesno {

/// The solver's knowledge: one entry per position, 0 while open, the
/// identified color once fixed. Nonzero entries stay pairwise distinct.
class PartialSolution {
public:
    explicit PartialSolution(const GameParams& params)
      : params_(params), entries_(static_cast<std::size_t>(params.positions), 0) {}

    const GameParams& params() const noexcept { return params_; }

    int color_at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }
    bool is_open(int pos) const { return color_at(pos) == 0; }

    int fixed_count() const noexcept { return fixed_count_; }
    int open_count() const noexcept { return params_.positions - fixed_count_; }

    bool color_used(int color) const {
        for (int e : entries_)
            if (e == color) return true;
        return false;
    }

    /// Record an identified position. Refusals signal a codemaker whose
    /// answers forced two contradictory deductions.
    void fix(int pos, int color) {
        if (pos < 1 || pos > params_.positions)
            throw GameError(ErrorKind::IndexOutOfRange, "position outside board");
        if (color < 1 || color > params_.colors)
            throw GameError(ErrorKind::ColorOutOfRange, "color outside board");
        if (!is_open(pos))
            throw GameError(ErrorKind::InconsistentCodemaker,
                            "position " + std::to_string(pos) + " deduced twice");
        if (color_used(color))
            throw GameError(ErrorKind::InconsistentCodemaker,
                            "color " + std::to_string(color) + " deduced twice");
        entries_[static_cast<std::size_t>(pos - 1)] = color;
        ++fixed_count_;
    }

    std::vector<int> fixed_positions() const {
        std::vector<int> out;
        for (int i = 1; i <= params_.positions; ++i)
            if (!is_open(i)) out.push_back(i);
        return out;
    }

    std::vector<int> open_positions() const {
        std::vector<int> out;
        for (int i = 1; i <= params_.positions; ++i)
            if (is_open(i)) out.push_back(i);
        return out;
    }

    std::vector<int> unused_colors() const {
        std::vector<bool> used(static_cast<std::size_t>(params_.colors) + 1, false);
        for (int e : entries_)
            if (e != 0) used[static_cast<std::size_t>(e)] = true;
        std::vector<int> out;
        for (int c = 1; c <= params_.colors; ++c)
            if (!used[static_cast<std::size_t>(c)]) out.push_back(c);
        return out;
    }

    const std::vector<int>& entries() const noexcept { return entries_; }

private:
    GameParams params_;
    std::vector<int> entries_;
    int fixed_count_ = 0;
};

/// The predecessor cycle on an ascending index list: pi(i_t) = i_{t-1} and
/// pi(i_1) = i_m. Any derangement works for blanking coincidences; this one
/// is pinned so transcripts are reproducible.
inline std::vector<std::pair<int, int>> cyclic_derangement(const std::vector<int>& indices) {
    if (indices.size() < 2)
        throw GameError(ErrorKind::TooFewIndices, "derangement needs at least two indices");
    std::vector<std::pair<int, int>> mapping;
    mapping.reserve(indices.size());
    for (std::size_t t = 0; t < indices.size(); ++t) {
        std::size_t prev = (t + indices.size() - 1) % indices.size();
        mapping.emplace_back(indices[t], indices[prev]);
    }
    return mapping;
}

namespace detail {

inline Code swap_positions(const Code& code, int a, int b, const GameParams& params) {
    std::vector<int> entries = code.entries();
    std::swap(entries[static_cast<std::size_t>(a - 1)], entries[static_cast<std::size_t>(b - 1)]);
    return Code(std::move(entries), params);
}

}  // namespace detail

/// Whether `query` names a correct color at some OPEN position, derived from
/// one or two real queries:
///
///   (a) query and partial coincide nowhere: forward the query as-is.
///   (b) more than one coincidence: rearrange the coinciding entries by a
///       derangement so every one of them becomes wrong, ask once.
///   (c) a single coincidence at i and another fixed position exists:
///       swap i with the smallest other fixed position, ask once.
///   (d) a single coincidence at i and no other fixed position: swap i with
///       each of the two smallest other positions and ask both; the answer
///       is no only if both probes answer no.
///
/// Cases (a)-(c) cost exactly one query, case (d) exactly two.
inline Answer info_p(const Code& query, const PartialSolution& partial, Codemaker& maker) {
    const GameParams& params = partial.params();
    std::vector<int> coincidences;
    for (int i = 1; i <= params.positions; ++i)
        if (!partial.is_open(i) && query.color_at(i) == partial.color_at(i))
            coincidences.push_back(i);

    if (coincidences.empty()) return maker.respond(query);

    if (coincidences.size() > 1) {
        std::vector<int> entries = query.entries();
        for (auto [i, source] : cyclic_derangement(coincidences))
            entries[static_cast<std::size_t>(i - 1)] = query.color_at(source);
        return maker.respond(Code(std::move(entries), params));
    }

    int i = coincidences.front();
    if (partial.fixed_count() > 1) {
        int partner = 0;
        for (int pos : partial.fixed_positions()) {
            if (pos != i) {
                partner = pos;
                break;
            }
        }
        return maker.respond(detail::swap_positions(query, i, partner, params));
    }

    // Case (d): the coinciding position is the only fixed one.
    if (params.positions < 3)
        throw GameError(ErrorKind::DegenerateBoard,
                        "single-coincidence probe needs at least 3 positions");
    int j1 = (i == 1) ? 2 : 1;
    int j2 = (i == 1 || i == 2) ? 3 : 2;
    Answer first = maker.respond(detail::swap_positions(query, i, j1, params));
    Answer second = maker.respond(detail::swap_positions(query, i, j2, params));
    return (is_yes(first) || is_yes(second)) ? Answer::Yes : Answer::No;
}

}  // namespace yesno
