#pragma once

#include "scoper/problem.h"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scoper::search {

// Caps that make search over possibly unbounded numeric spaces terminate.
struct SearchLimits {
    long long max_expanded_states = 200000;
    Rational max_numeric_magnitude{1000};
};

struct Plan {
    std::vector<ActionId> actions;
    Rational cost{0};
    std::vector<State> trace;  // length = actions + 1, starting at s0
};

enum class SolveStatus { Solved, Unsolvable, Inconclusive };

struct SolveResult {
    SolveStatus status = SolveStatus::Inconclusive;
    std::optional<Plan> plan;
    long long expanded = 0;
    bool truncated = false;  // a limit cut off part of the space

    bool solved() const { return status == SolveStatus::Solved; }
};

// Cost-optimal plan via uniform-cost search with full-state duplicate
// detection. Ties between equal-cost frontier nodes break by insertion order,
// so equal inputs always yield equal plan costs. Unsolvable is reported only
// when the reachable space was exhausted without truncation; otherwise a
// goal-free search is Inconclusive.
SolveResult solve(const PlanningProblem& pp, const SearchLimits& limits = {});

// Fires, per step, the unique applicable CAE triple of the named action and
// returns the state sequence projected onto project_to (ascending fluent id).
// Throws ReplayException when no triple of an action is applicable.
std::vector<std::vector<Value>> replay(const PlanningProblem& pp,
                                       const std::vector<ActionId>& actions,
                                       const std::set<FluentId>& project_to);

// Projection helper shared by replay and the verifier.
std::vector<Value> project(const State& s, const std::set<FluentId>& fluents);

}  // namespace scoper::search
