#pragma once

#include "scoper/cnf.h"
#include "scoper/quotient.h"

#include <optional>
#include <set>
#include <vector>

namespace scoper {

struct ScopeOptions {
    std::size_t clause_cap = kDefaultClauseCap;
    // Verification harness only: skip the initial-state truth test when
    // classifying precondition clauses. Produces a deliberately unsound
    // scoper so the verifier's FAIL path can be exercised.
    bool mutate_drop_initial_state_check = false;
};

// Fluent partition and quotient transition system produced by scope_task.
// The internal dummy goal fluent and its transition are stripped from every
// field. All vectors are sorted, so equal inputs give identical results.
struct ScopeResult {
    std::vector<FluentId> j_rel;
    std::vector<FluentId> j_cl;
    std::vector<FluentId> j_irrel;
    std::vector<QuotientCae> quotient_transitions;
    std::vector<ActionId> retained_actions;
    int iterations = 0;

    bool is_relevant(FluentId f) const {
        return std::binary_search(j_rel.begin(), j_rel.end(), f);
    }
    bool is_retained(ActionId a) const {
        return std::binary_search(retained_actions.begin(), retained_actions.end(), a);
    }
    std::set<FluentId> j_rel_set() const { return {j_rel.begin(), j_rel.end()}; }
    std::set<FluentId> j_cl_set() const { return {j_cl.begin(), j_cl.end()}; }
};

// Problem extended with the dummy goal fluent and the zero-cost transition
// that sets it once the goal condition holds.
struct GoalAugmented {
    PlanningProblem problem;
    FluentId goal_fluent = -1;
    ActionId goal_action = -1;
};

GoalAugmented augment_with_goal(const PlanningProblem& pp);

// Clause-level check on a reduced transition system over j: every CNF clause
// of every quotient precondition must either be defined over j, or be true in
// s0 while mentioning no fluent in the side effects of the system. On failure
// the offending clause is returned as a witness.
struct ScopedCheck {
    std::optional<Clause> witness;
    bool ok() const { return !witness.has_value(); }
};

ScopedCheck is_scoped(const std::vector<QuotientCae>& reduced, const State& s0,
                      const std::set<FluentId>& j, const ScopeOptions& options = {});

// The task scoping fixed point: grows the relevant fluent set from the goal
// until the reduced transition system passes is_scoped, then classifies every
// fluent as relevant, causally linked or irrelevant.
ScopeResult scope_task(const PlanningProblem& pp, const ScopeOptions& options = {});

// The runnable scoped task: the original problem with transitions filtered to
// the retained actions. Fluent and action tables are unchanged, so states,
// costs and traces stay directly comparable with the original.
PlanningProblem restrict_to_actions(const PlanningProblem& pp,
                                    const std::vector<ActionId>& keep);

// No quotient transition may both affect a relevant fluent and side-affect a
// causally linked one. Returns false if some quotient violates that.
bool causal_link_separation_holds(const ScopeResult& scope);

}  // namespace scoper
