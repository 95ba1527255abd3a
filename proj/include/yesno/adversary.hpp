// adversary.hpp -- the cheating codemaker behind the lower bound: never
// commits to a secret, answers every query with whichever side of the
// partition keeps more codes alive.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "yesno/core.hpp"

namespace yesno {

/// Explicit set of the secrets still consistent with every answer given.
/// Kept in lexicographic order; never empty.
class CandidateSet {
public:
    /// All repetition-free codes. Refuses oversized boards outright, since a
    /// sampled set could not certify the bound.
    static CandidateSet initial(const GameParams& params, std::uint64_t budget = 10'000'000) {
        CandidateSet set(params);
        set.members_ = enumerate_all_codes(params, budget);
        set.size_history_.push_back(set.members_.size());
        return set;
    }

    const GameParams& params() const noexcept { return params_; }
    const std::vector<Code>& members() const noexcept { return members_; }
    int round() const noexcept { return round_; }

    /// |M| after each answer, starting with |M0|; the halving audit trail.
    const std::vector<std::size_t>& size_history() const noexcept { return size_history_; }

    /// Majority-side answer. Ties go to yes, matching the bound's proof.
    Answer answer(const Code& query) { return answer_raw(query.entries()); }

    /// Same, for queries that may repeat colors: the lower bound holds even
    /// for codebreakers allowed to repeat, so the adversary must accept them.
    Answer answer_raw(const std::vector<int>& query) {
        std::vector<Code> yes_side, no_side;
        yes_side.reserve(members_.size());
        no_side.reserve(members_.size());
        for (Code& member : members_) {
            if (matches_anywhere(query, member))
                yes_side.push_back(std::move(member));
            else
                no_side.push_back(std::move(member));
        }
        Answer answer = yes_side.size() >= no_side.size() ? Answer::Yes : Answer::No;
        members_ = is_yes(answer) ? std::move(yes_side) : std::move(no_side);
        ++round_;
        size_history_.push_back(members_.size());
        return answer;
    }

    /// Commit to a secret once the game is over. Given the solver's
    /// announcement, returns a differing member whenever one exists.
    Code reveal(const std::optional<Code>& announced = std::nullopt) const {
        if (announced && members_.size() >= 2) {
            for (const Code& member : members_)
                if (!(member == *announced)) return member;
        }
        return members_.front();
    }

private:
    explicit CandidateSet(const GameParams& params) : params_(params) {}

    static bool matches_anywhere(const std::vector<int>& query, const Code& member) {
        for (int i = 1; i <= member.size(); ++i)
            if (query[static_cast<std::size_t>(i - 1)] == member.color_at(i)) return true;
        return false;
    }

    GameParams params_;
    std::vector<Code> members_;
    std::vector<std::size_t> size_history_;
    int round_ = 0;
};

/// The candidate set can shrink to at most half per answer, so any solver
/// needs at least log2 |M0| queries before one code remains. Equals
/// lower_bound_queries; duplicated under the adversary's name so the harness
/// reads as the proof does.
inline double min_queries_certificate(const GameParams& params) {
    return lower_bound_queries(params);
}

class AdversaryCodemaker final : public Codemaker {
public:
    explicit AdversaryCodemaker(const GameParams& params, std::uint64_t budget = 10'000'000)
      : set_(CandidateSet::initial(params, budget)) {}

    Answer respond(const Code& query) override { return set_.answer(query); }

    CandidateSet& candidates() noexcept { return set_; }
    const CandidateSet& candidates() const noexcept { return set_; }

private:
    CandidateSet set_;
};

}  // namespace yesno
