// solve.hpp -- one entry point over the three codebreakers.

#pragma once

#include <string>
#include <string_view>

#include "yesno/reference.hpp"
#include "yesno/solver_general.hpp"
#include "yesno/solver_perm.hpp"

namespace yesno {

enum class SolverKind { Auto, Perm, General, Greedy };

inline const char* to_string(SolverKind kind) noexcept {
    switch (kind) {
        case SolverKind::Auto: return "auto";
        case SolverKind::Perm: return "perm";
        case SolverKind::General: return "general";
        case SolverKind::Greedy: return "greedy";
    }
    return "?";
}

inline SolverKind parse_solver_kind(std::string_view name) {
    if (name == "auto") return SolverKind::Auto;
    if (name == "perm") return SolverKind::Perm;
    if (name == "general") return SolverKind::General;
    if (name == "greedy") return SolverKind::Greedy;
    throw GameError(ErrorKind::Precondition, "unknown solver '" + std::string(name) + "'");
}

/// Auto picks the structured solver matching the board and falls back to the
/// greedy reference solver on boards too small for the shift machinery.
inline SolveResult solve_with(SolverKind kind, Codemaker& maker, const GameParams& params) {
    switch (kind) {
        case SolverKind::Perm:
            return solve_permutation(maker, params);
        case SolverKind::General:
            return solve_general(maker, params);
        case SolverKind::Greedy:
            return greedy_small_solve(maker, params);
        case SolverKind::Auto:
            break;
    }
    if (params.is_permutation_game()) return solve_permutation(maker, params);
    if (params.positions >= 2) return solve_general(maker, params);
    return greedy_small_solve(maker, params);
}

}  // namespace yesno
