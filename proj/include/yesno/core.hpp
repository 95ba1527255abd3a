// core.hpp -- board parameters, codes, the yes/no oracle, shift queries,
// transcripts and the query-count bound formulas for Yes-No AB-Mastermind.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace yesno {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorKind {
    WrongLength,
    ColorOutOfRange,
    RepeatedColor,
    IndexOutOfRange,
    TooSmall,
    TooFewIndices,
    DegenerateBoard,
    NoActiveIndex,
    InconsistentCodemaker,
    InconsistentPartial,
    TooLarge,
    Precondition,
};

/// All domain failures carry a machine-checkable kind next to the message.
class GameError : public std::runtime_error {
public:
    GameError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Board parameters
// ---------------------------------------------------------------------------

/// Number of positions and colors of a board. Requires colors >= positions >= 1,
/// so secrets and queries are repetition-free by the AB rule.
struct GameParams {
    int positions = 1;  // n
    int colors = 1;     // k

    GameParams(int n, int k) : positions(n), colors(k) {
        if (n < 1)
            throw GameError(ErrorKind::TooSmall, "positions must be >= 1");
        if (k < n)
            throw GameError(ErrorKind::TooSmall,
                            "colors must be >= positions for repetition-free codes");
    }

    bool is_permutation_game() const noexcept { return colors == positions; }

    /// k + 1 - n; lowest factor of the code-space product.
    int ell() const noexcept { return colors + 1 - positions; }

    bool operator==(const GameParams&) const noexcept = default;
};

// ---------------------------------------------------------------------------
// Codes
// ---------------------------------------------------------------------------

/// A repetition-free sequence of `positions` colors from [1..colors].
/// Positions are 1-based throughout the library, matching the usual
/// game-description convention; color_at(1) is the first peg.
class Code {
public:
    Code() = default;

    /// Validating constructor. Length, range and distinctness are always
    /// enforced; there is no unchecked path.
    Code(std::vector<int> entries, const GameParams& params)
      : entries_(std::move(entries)) {
        if (static_cast<int>(entries_.size()) != params.positions)
            throw GameError(ErrorKind::WrongLength,
                            "code has " + std::to_string(entries_.size()) +
                                " entries, expected " + std::to_string(params.positions));
        for (int c : entries_) {
            if (c < 1 || c > params.colors)
                throw GameError(ErrorKind::ColorOutOfRange,
                                "color " + std::to_string(c) + " outside [1.." +
                                    std::to_string(params.colors) + "]");
        }
        std::vector<bool> seen(static_cast<std::size_t>(params.colors) + 1, false);
        for (int c : entries_) {
            if (seen[static_cast<std::size_t>(c)])
                throw GameError(ErrorKind::RepeatedColor,
                                "color " + std::to_string(c) + " repeats");
            seen[static_cast<std::size_t>(c)] = true;
        }
    }

    int size() const noexcept { return static_cast<int>(entries_.size()); }

    /// pos in [1..n].
    int color_at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }

    const std::vector<int>& entries() const noexcept { return entries_; }

    bool operator==(const Code&) const noexcept = default;
    auto operator<=>(const Code&) const noexcept = default;

private:
    std::vector<int> entries_;
};

/// Spec'd operation name for the validating constructor.
inline Code validate_code(const std::vector<int>& entries, const GameParams& params) {
    return Code(entries, params);
}

/// Serialization used everywhere codes cross a text boundary: "9,10,6,8".
inline std::string code_to_string(const Code& code) {
    std::string out;
    for (int i = 1; i <= code.size(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(code.color_at(i));
    }
    return out;
}

inline Code parse_code(std::string_view text, const GameParams& params) {
    std::vector<int> entries;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            int color = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            entries.push_back(color);
        } catch (const std::exception&) {
            throw GameError(ErrorKind::ColorOutOfRange, "unparsable color '" + token + "'");
        }
    }
    return Code(entries, params);
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

enum class Answer { No = 0, Yes = 1 };

inline bool is_yes(Answer a) noexcept { return a == Answer::Yes; }

inline const char* to_string(Answer a) noexcept { return is_yes(a) ? "yes" : "no"; }

/// The raw oracle: yes iff the query names the secret's color at some position.
inline Answer info(const Code& query, const Code& secret) {
    for (int i = 1; i <= query.size(); ++i)
        if (query.color_at(i) == secret.color_at(i)) return Answer::Yes;
    return Answer::No;
}

// ---------------------------------------------------------------------------
// Shift queries
// ---------------------------------------------------------------------------

/// The j-th initial query, j in [1..k]: the first n entries of the (j-1)-fold
/// circular right shift of (1,...,k). Across j, every color visits every
/// position exactly once.
inline Code shift_query(int j, const GameParams& params) {
    if (j < 1 || j > params.colors)
        throw GameError(ErrorKind::IndexOutOfRange,
                        "shift index " + std::to_string(j) + " outside [1.." +
                            std::to_string(params.colors) + "]");
    std::vector<int> entries(static_cast<std::size_t>(params.positions));
    for (int i = 1; i <= params.positions; ++i) {
        int r = (i - j) % params.colors;
        if (r < 0) r += params.colors;
        entries[static_cast<std::size_t>(i - 1)] = r + 1;
    }
    return Code(std::move(entries), params);
}

/// Color of shift j at position pos without building the whole code.
inline int shift_color(int j, int pos, const GameParams& params) {
    int r = (pos - j) % params.colors;
    if (r < 0) r += params.colors;
    return r + 1;
}

/// The unique shift index j with shift_color(j, pos) == color.
inline int owner_shift(int pos, int color, const GameParams& params) {
    int r = (pos - color) % params.colors;
    if (r < 0) r += params.colors;
    return r + 1;
}

/// Cyclic successor over [1..k]; the partner of an active index.
inline int successor_shift(int j, const GameParams& params) {
    return j % params.colors + 1;
}

// ---------------------------------------------------------------------------
// Code space
// ---------------------------------------------------------------------------

/// |{repetition-free codes}| = k * (k-1) * ... * ell as a double (exact until
/// it exceeds 2^53, far beyond any enumerable board).
inline double code_space_size(const GameParams& params) {
    double size = 1.0;
    for (int j = params.ell(); j <= params.colors; ++j) size *= j;
    return size;
}

/// All repetition-free codes in lexicographic order. Refuses boards whose
/// code space exceeds the budget instead of silently sampling.
inline std::vector<Code> enumerate_all_codes(const GameParams& params,
                                             std::uint64_t budget = 10'000'000) {
    double size = code_space_size(params);
    if (size > static_cast<double>(budget))
        throw GameError(ErrorKind::TooLarge,
                        "code space has " + std::to_string(size) + " members, budget " +
                            std::to_string(budget));
    std::vector<Code> all;
    all.reserve(static_cast<std::size_t>(size));
    std::vector<int> current;
    std::vector<bool> used(static_cast<std::size_t>(params.colors) + 1, false);
    auto recurse = [&](auto&& self) -> void {
        if (static_cast<int>(current.size()) == params.positions) {
            all.emplace_back(current, params);
            return;
        }
        for (int c = 1; c <= params.colors; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = true;
            current.push_back(c);
            self(self);
            current.pop_back();
            used[static_cast<std::size_t>(c)] = false;
        }
    };
    recurse(recurse);
    return all;
}

// ---------------------------------------------------------------------------
// Bound formulas
// ---------------------------------------------------------------------------

inline int ceil_log2(int n) {
    int bits = 0;
    while ((1LL << bits) < n) ++bits;
    return bits;
}

/// Information-theoretic floor: sum_{j=ell}^{k} log2 j = log2 |code space|.
/// Any strategy needs at least this many queries in the worst case.
inline double lower_bound_queries(const GameParams& params) {
    double sum = 0.0;
    for (int j = params.ell(); j <= params.colors; ++j) sum += std::log2(double(j));
    return sum;
}

/// The proven worst-case guarantee: (n-3) log2 n + 5n/2 - 1 for k = n and
/// (n-2) log2 n + k + 1 for k > n. The permutation form is meaningless below
/// n = 4.
inline double upper_bound_queries(const GameParams& params) {
    double n = params.positions;
    if (params.is_permutation_game()) {
        if (params.positions < 4)
            throw GameError(ErrorKind::TooSmall,
                            "permutation-game bound needs at least 4 positions");
        return (n - 3.0) * std::log2(n) + 2.5 * n - 1.0;
    }
    return (n - 2.0) * std::log2(n) + params.colors + 1.0;
}

/// Per-step accounting ceiling our solver is hard-asserted against:
/// n initial + first fix + per-iteration findNext and refresh + final pair
/// for k = n; k initial + n binary searches with refresh for k > n.
inline long accounting_bound_queries(const GameParams& params) {
    long n = params.positions;
    long lg = ceil_log2(params.positions);
    if (params.is_permutation_game())
        return (n - 2) * lg + (5 * n + 1) / 2 + n;
    return n * lg + n + params.colors + 2;
}

// ---------------------------------------------------------------------------
// Transcript
// ---------------------------------------------------------------------------

/// Why a query was issued; every transcript record carries one.
enum class QueryPurpose { Initial, FirstFix, FindNext, InfopAux, Final };

inline const char* to_string(QueryPurpose p) noexcept {
    switch (p) {
        case QueryPurpose::Initial: return "initial";
        case QueryPurpose::FirstFix: return "first-fix";
        case QueryPurpose::FindNext: return "findnext";
        case QueryPurpose::InfopAux: return "infop-aux";
        case QueryPurpose::Final: return "final";
    }
    return "?";
}

struct TranscriptRecord {
    int seq = 0;  // 1-based, strictly increasing
    Code query;
    Answer answer = Answer::No;
    QueryPurpose purpose = QueryPurpose::Initial;
};

/// Append-only record of every real query of a session.
class Transcript {
public:
    void append(Code query, Answer answer, QueryPurpose purpose) {
        records_.push_back(TranscriptRecord{static_cast<int>(records_.size()) + 1,
                                            std::move(query), answer, purpose});
    }

    int total_queries() const noexcept { return static_cast<int>(records_.size()); }
    const std::vector<TranscriptRecord>& records() const noexcept { return records_; }

private:
    std::vector<TranscriptRecord> records_;
};

// ---------------------------------------------------------------------------
// Codemakers
// ---------------------------------------------------------------------------

/// The answering side of the game. Implementations may hold a fixed secret,
/// adapt adversarially, or forward to a human.
class Codemaker {
public:
    virtual ~Codemaker() = default;
    virtual Answer respond(const Code& query) = 0;
};

class HonestCodemaker final : public Codemaker {
public:
    HonestCodemaker(Code secret) : secret_(std::move(secret)) {}

    Answer respond(const Code& query) override { return info(query, secret_); }

    const Code& secret() const noexcept { return secret_; }

private:
    Code secret_;
};

/// Wraps any codemaker and records every query into a transcript. Solvers
/// talk to the wrapped maker only through this, so counting cannot be
/// bypassed; the wrapper also re-validates each query against the board.
class TranscriptRecorder final : public Codemaker {
public:
    TranscriptRecorder(Codemaker& inner, const GameParams& params)
      : inner_(&inner), params_(params) {}

    Answer respond(const Code& query) override {
        Code checked = validate_code(query.entries(), params_);
        Answer answer = inner_->respond(checked);
        transcript_.append(std::move(checked), answer, purpose_);
        return answer;
    }

    void set_purpose(QueryPurpose p) noexcept { purpose_ = p; }
    QueryPurpose purpose() const noexcept { return purpose_; }

    const Transcript& transcript() const noexcept { return transcript_; }
    Transcript take_transcript() noexcept { return std::move(transcript_); }

private:
    Codemaker* inner_;
    GameParams params_;
    Transcript transcript_;
    QueryPurpose purpose_ = QueryPurpose::Initial;
};

/// What a completed solver session hands back: the deduced secret plus the
/// full query record its bounds are judged by.
struct SolveResult {
    Code secret;
    Transcript transcript;
};

/// Sets the recorder's purpose for the current scope, restoring on exit.
class PurposeScope {
public:
    PurposeScope(TranscriptRecorder& recorder, QueryPurpose p)
      : recorder_(&recorder), previous_(recorder.purpose()) {
        recorder_->set_purpose(p);
    }
    ~PurposeScope() { recorder_->set_purpose(previous_); }

    PurposeScope(const PurposeScope&) = delete;
    PurposeScope& operator=(const PurposeScope&) = delete;

private:
    TranscriptRecorder* recorder_;
    QueryPurpose previous_;
};

}  // namespace yesno
