// cli.hpp -- the command-line surface: solve single boards, sweep
// benchmarks, pit solvers against the cheating codemaker, run verification
// and host interactive sessions. Kept in a header so tests can drive it
// in-process with scripted streams.

#pragma once

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "yesno/bench.hpp"
#include "yesno/solve.hpp"
#include "yesno/transcript_io.hpp"
#include "yesno/verify.hpp"

namespace yesno {
namespace cli {

// Exit codes: 0 success, 1 verification/solve failure, 2 usage error,
// 3 budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

namespace detail {

inline int parse_int(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw GameError(ErrorKind::Precondition,
                        std::string("unparsable ") + what + " '" + token + "'");
    }
}

/// "4", "4:8" and "4,6,8" all describe board sizes for bench sweeps.
inline std::vector<int> parse_size_list(const std::string& text) {
    std::vector<int> sizes;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos) {
            sizes.push_back(parse_int(token, "size"));
        } else {
            int from = parse_int(token.substr(0, colon), "size");
            int to = parse_int(token.substr(colon + 1), "size");
            for (int v = from; v <= to; ++v) sizes.push_back(v);
        }
    }
    if (sizes.empty()) throw GameError(ErrorKind::Precondition, "empty size list");
    return sizes;
}

/// Color-count rule for bench sweeps: "n", "n+<d>", "2n" or a constant.
inline int apply_color_rule(const std::string& rule, int n) {
    if (rule == "n") return n;
    if (rule == "2n") return 2 * n;
    if (rule.rfind("n+", 0) == 0) return n + parse_int(rule.substr(2), "color rule");
    return parse_int(rule, "color rule");
}

inline void write_or_print(const std::string& content, const std::string& path,
                           std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw GameError(ErrorKind::Precondition, "cannot open " + path);
    file << content;
    out << "wrote " << path << "\n";
}

struct PlayAborted {};
struct PlayCheat {};

/// Codemaker driven by a human (or scripted stream): prints each query,
/// reads y/n, and keeps the consistent set as a lie detector while the board
/// is small enough to enumerate.
class InteractiveCodemaker final : public Codemaker {
public:
    InteractiveCodemaker(const GameParams& params, std::istream& in, std::ostream& out,
                         std::uint64_t tracking_budget = 1'000'000)
      : params_(params), in_(&in), out_(&out) {
        if (code_space_size(params) <= static_cast<double>(tracking_budget)) {
            tracked_ = enumerate_all_codes(params, tracking_budget);
            tracking_ = true;
        } else {
            *out_ << "(board too large for live consistency tracking; "
                     "the final claim is still checked)\n";
        }
    }

    Answer respond(const Code& query) override {
        ++count_;
        *out_ << "query " << count_ << ": " << code_to_string(query) << "\n";
        Answer answer = read_answer();
        history_.emplace_back(query, answer);
        if (tracking_) {
            std::vector<Code> kept;
            for (const Code& candidate : tracked_)
                if (info(query, candidate) == answer) kept.push_back(candidate);
            tracked_.swap(kept);
            *out_ << "  (" << tracked_.size() << " codes remain consistent)\n";
            if (tracked_.empty()) throw PlayCheat{};
        }
        return answer;
    }

    /// Post-hoc check used when live tracking is off.
    bool claim_consistent(const Code& claim) const {
        for (const auto& [query, answer] : history_)
            if (info(query, claim) != answer) return false;
        return true;
    }

private:
    Answer read_answer() {
        std::string line;
        while (true) {
            *out_ << "  answer (y/n)? " << std::flush;
            if (!std::getline(*in_, line)) throw PlayAborted{};
            if (line == "y" || line == "yes" || line == "Y") return Answer::Yes;
            if (line == "n" || line == "no" || line == "N") return Answer::No;
            *out_ << "  please answer y or n\n";
        }
    }

    GameParams params_;
    std::istream* in_;
    std::ostream* out_;
    std::vector<Code> tracked_;
    bool tracking_ = false;
    int count_ = 0;
    std::vector<std::pair<Code, Answer>> history_;
};

inline std::string format_bound(double value) {
    if (std::isnan(value)) return "n/a";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.4f", value);
    return buffer;
}

}  // namespace detail

struct SolveOptions {
    int n = 0;
    int k = 0;  // 0: same as n
    std::string secret;
    std::uint64_t seed = 0;
    std::string solver = "auto";
    std::string out_path;
};

inline int cmd_solve(const SolveOptions& options, std::ostream& out) {
    GameParams params(options.n, options.k == 0 ? options.n : options.k);
    SolverKind kind = parse_solver_kind(options.solver);
    Code secret = options.secret.empty()
                      ? [&] {
                            SeededRng rng(options.seed);
                            return random_code(params, rng);
                        }()
                      : parse_code(options.secret, params);

    HonestCodemaker maker(secret);
    SolveResult result = solve_with(kind, maker, params);
    bool correct = result.secret == secret;

    out << "n " << params.positions << "\n"
        << "k " << params.colors << "\n"
        << "secret " << code_to_string(secret) << "\n"
        << "found " << code_to_string(result.secret) << "\n"
        << "queries " << result.transcript.total_queries() << "\n"
        << "lower_bound " << detail::format_bound(lower_bound_queries(params)) << "\n"
        << "bound_theorem "
        << detail::format_bound(!params.is_permutation_game() || params.positions >= 4
                                    ? upper_bound_queries(params)
                                    : std::numeric_limits<double>::quiet_NaN())
        << "\n"
        << "bound_accounting " << accounting_bound_queries(params) << "\n"
        << "result " << (correct ? "ok" : "MISMATCH") << "\n";

    if (!options.out_path.empty()) {
        std::ofstream file(options.out_path, std::ios::binary);
        if (!file) throw GameError(ErrorKind::Precondition, "cannot open " + options.out_path);
        file << transcript_to_string(params, result);
        out << "transcript " << options.out_path << "\n";
    }
    return correct ? kExitOk : kExitFailure;
}

struct BenchOptions {
    std::string n_list;
    std::string k_rule = "n";
    int trials = 100;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::string solver = "auto";
    std::string format = "csv";
    std::string out_path;
};

inline int cmd_bench(const BenchOptions& options, std::ostream& out) {
    SolverKind kind = parse_solver_kind(options.solver);
    bool json_lines = options.format == "json-lines";
    if (!json_lines && options.format != "csv")
        throw GameError(ErrorKind::Precondition, "unknown format '" + options.format + "'");

    std::string output;
    if (!json_lines) output = std::string(bench_csv_header()) + "\n";
    for (int n : detail::parse_size_list(options.n_list)) {
        GameParams params(n, detail::apply_color_rule(options.k_rule, n));
        BenchRow row =
            run_bench_row(params, kind, options.trials, options.exhaustive, options.seed);
        output += (json_lines ? bench_row_json_line(row) : bench_row_csv(row)) + "\n";
    }
    detail::write_or_print(output, options.out_path, out);
    return kExitOk;
}

struct AdversaryOptions {
    int n = 0;
    int k = 0;
    std::string solver = "auto";
    std::uint64_t budget = 10'000'000;
};

inline int cmd_adversary(const AdversaryOptions& options, std::ostream& out) {
    GameParams params(options.n, options.k == 0 ? options.n : options.k);
    SolverKind kind = parse_solver_kind(options.solver);
    AdversaryAudit audit = audit_adversary_session(kind, params, options.budget);

    out << "candidates " << code_space_size(params) << "\n"
        << "forced_minimum " << audit.forced_minimum << "\n"
        << "queries " << audit.total_queries << "\n"
        << "queries_to_singleton " << audit.queries_to_singleton << "\n"
        << "halving " << (audit.halving_ok ? "ok" : "VIOLATED") << "\n"
        << "consistency " << (audit.consistent ? "ok" : "FAIL") << "\n"
        << "announcement " << (audit.announcement_matches ? "ok" : "FAIL") << "\n"
        << "revealed " << code_to_string(audit.revealed) << "\n"
        << "result " << (audit.all_ok() ? "ok" : "FAIL") << "\n";
    return audit.all_ok() ? kExitOk : kExitFailure;
}

struct PlayOptions {
    int n = 0;
    int k = 0;
};

inline int cmd_play(const PlayOptions& options, std::istream& in, std::ostream& out) {
    GameParams params(options.n, options.k == 0 ? options.n : options.k);
    out << "you are the codemaker on a board with " << params.positions << " positions and "
        << params.colors << " colors; answer each query with y or n\n";
    detail::InteractiveCodemaker maker(params, in, out);
    try {
        SolveResult result = solve_with(SolverKind::Auto, maker, params);
        if (!maker.claim_consistent(result.secret)) {
            out << "you have cheated: no code is consistent\n";
            return kExitFailure;
        }
        out << "your secret is " << code_to_string(result.secret) << " ("
            << result.transcript.total_queries() << " queries)\n";
        return kExitOk;
    } catch (const detail::PlayCheat&) {
        out << "you have cheated: no code is consistent\n";
        return kExitFailure;
    } catch (const detail::PlayAborted&) {
        out << "\naborted (end of input)\n";
        return kExitFailure;
    } catch (const GameError& e) {
        if (e.kind() == ErrorKind::InconsistentCodemaker) {
            out << "you have cheated: no code is consistent\n";
            return kExitFailure;
        }
        throw;
    }
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Yes-No AB-Mastermind solvers, adversary and benchmarks"};
    app.require_subcommand(1);

    SolveOptions solve_options;
    CLI::App* solve_cmd = app.add_subcommand("solve", "solve one board against a known secret");
    solve_cmd->add_option("--n", solve_options.n, "positions")->required();
    solve_cmd->add_option("--k", solve_options.k, "colors (default: same as --n)");
    solve_cmd->add_option("--secret", solve_options.secret, "comma-separated secret code");
    solve_cmd->add_option("--seed", solve_options.seed, "seed for a random secret");
    solve_cmd->add_option("--solver", solve_options.solver, "perm|general|greedy|auto");
    solve_cmd->add_option("--out", solve_options.out_path, "write the transcript here");

    BenchOptions bench_options;
    CLI::App* bench_cmd = app.add_subcommand("bench", "measure query counts against the bounds");
    bench_cmd->add_option("--n", bench_options.n_list, "positions: 8, 4:8 or 4,6,8")->required();
    bench_cmd->add_option("--k", bench_options.k_rule, "colors rule: n, n+2, 2n or a constant");
    bench_cmd->add_option("--trials", bench_options.trials, "random secrets per board");
    bench_cmd->add_flag("--exhaustive", bench_options.exhaustive, "enumerate every secret");
    bench_cmd->add_option("--seed", bench_options.seed, "base seed; trial t uses seed+t");
    bench_cmd->add_option("--solver", bench_options.solver, "perm|general|greedy|auto");
    bench_cmd->add_option("--format", bench_options.format, "csv|json-lines");
    bench_cmd->add_option("--out", bench_options.out_path, "write rows here instead of stdout");

    AdversaryOptions adversary_options;
    CLI::App* adversary_cmd =
        app.add_subcommand("adversary", "play a solver against the cheating codemaker");
    adversary_cmd->add_option("--n", adversary_options.n, "positions")->required();
    adversary_cmd->add_option("--k", adversary_options.k, "colors (default: same as --n)");
    adversary_cmd->add_option("--solver", adversary_options.solver, "perm|general|greedy|auto");
    adversary_cmd->add_option("--budget", adversary_options.budget,
                              "largest candidate set the adversary will hold");

    PlayOptions play_options;
    CLI::App* play_cmd = app.add_subcommand("play", "be the codemaker: answer y/n queries");
    play_cmd->add_option("--n", play_options.n, "positions")->required();
    play_cmd->add_option("--k", play_options.k, "colors (default: same as --n)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suite at desk scale");

    std::vector<const char*> argv;
    argv.push_back("yesno-mastermind");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_options, out);
        if (bench_cmd->parsed()) return cmd_bench(bench_options, out);
        if (adversary_cmd->parsed()) return cmd_adversary(adversary_options, out);
        if (play_cmd->parsed()) return cmd_play(play_options, in, out);
        if (verify_cmd->parsed()) return run_verification(out) ? kExitOk : kExitFailure;
    } catch (const GameError& e) {
        err << "error: " << e.what() << "\n";
        if (e.kind() == ErrorKind::TooLarge) return kExitBudget;
        if (e.kind() == ErrorKind::WrongLength || e.kind() == ErrorKind::ColorOutOfRange ||
            e.kind() == ErrorKind::RepeatedColor || e.kind() == ErrorKind::TooSmall ||
            e.kind() == ErrorKind::Precondition)
            return kExitUsage;
        return kExitFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}

}  // namespace cli
}  // namespace yesno
