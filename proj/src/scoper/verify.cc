#include "scoper/verify.h"

#include <algorithm>

namespace scoper {

namespace {

// Partition and coverage checks on the scope result; returns an explanation
// of the first violated structural property, if any.
std::optional<std::string> structural_violation(const PlanningProblem& pp,
                                                const ScopeResult& scope,
                                                const ScopeOptions& scope_options) {
    std::set<FluentId> seen;
    auto account = [&](const std::vector<FluentId>& part) {
        for (FluentId f : part) {
            if (f < 0 || f >= pp.num_fluents() || seen.count(f))
                return false;
            seen.insert(f);
        }
        return true;
    };
    if (!account(scope.j_rel) || !account(scope.j_cl) || !account(scope.j_irrel) ||
        static_cast<int>(seen.size()) != pp.num_fluents())
        return "fluent classes do not partition the fluent set";

    std::set<FluentId> rel_or_cl = scope.j_rel_set();
    for (FluentId f : scope.j_cl)
        rel_or_cl.insert(f);
    for (FluentId f : pp.goal().vars())
        if (!rel_or_cl.count(f))
            return "goal fluent " + pp.fluent(f).name +
                   " is neither relevant nor causally linked";

    if (!causal_link_separation_holds(scope))
        return "a quotient transition affects a relevant fluent and side-affects "
               "a causally linked one";

    // The terminal reduced system must pass the scoped check when rebuilt.
    GoalAugmented aug = augment_with_goal(pp);
    std::set<FluentId> j = scope.j_rel_set();
    j.insert(aug.goal_fluent);
    std::vector<QuotientCae> reduced = reduce_transitions(aug.problem.transitions(), j);
    ScopeOptions unmutated = scope_options;
    unmutated.mutate_drop_initial_state_check = false;
    if (!is_scoped(reduced, aug.problem.initial_state(), j, unmutated).ok())
        return "terminal reduced system fails the scoped check";

    return std::nullopt;
}

}  // namespace

VerifyReport verify_instance(const PlanningProblem& pp, const VerifyOptions& options) {
    VerifyReport report;
    report.scope = scope_task(pp, options.scope_options);

    if (auto violation = structural_violation(pp, report.scope, options.scope_options)) {
        report.outcome = VerifyOutcome::Fail;
        report.detail = *violation;
        return report;
    }

    PlanningProblem scoped = restrict_to_actions(pp, report.scope.retained_actions);
    search::SolveResult original = search::solve(pp, options.limits);
    search::SolveResult reduced = search::solve(scoped, options.limits);

    if (original.status == search::SolveStatus::Inconclusive ||
        reduced.status == search::SolveStatus::Inconclusive) {
        report.outcome = VerifyOutcome::Inconclusive;
        report.detail = "search limits truncated the state space";
        return report;
    }

    if (original.solved() != reduced.solved()) {
        report.outcome = VerifyOutcome::Fail;
        report.detail = original.solved()
                            ? "original is solvable but the scoped task is not"
                            : "scoped task is solvable but the original is not";
        if (original.solved())
            report.original_cost = original.plan->cost;
        if (reduced.solved())
            report.scoped_cost = reduced.plan->cost;
        return report;
    }

    if (!original.solved()) {
        report.outcome = VerifyOutcome::Pass;
        report.detail = "both unsolvable";
        return report;
    }

    report.original_cost = original.plan->cost;
    report.scoped_cost = reduced.plan->cost;
    if (original.plan->cost != reduced.plan->cost) {
        report.outcome = VerifyOutcome::Fail;
        report.detail = "optimal cost changed: original " +
                        to_string(original.plan->cost) + ", scoped " +
                        to_string(reduced.plan->cost);
        return report;
    }

    // Soundness: the scoped plan must replay in the original problem and pass
    // through the same relevant-fluent states.
    for (ActionId a : reduced.plan->actions) {
        if (!report.scope.is_retained(a)) {
            report.outcome = VerifyOutcome::Fail;
            report.detail = "scoped plan uses an action that was not retained";
            return report;
        }
    }
    std::set<FluentId> rel = report.scope.j_rel_set();
    try {
        auto lifted = search::replay(pp, reduced.plan->actions, rel);
        std::vector<std::vector<Value>> own;
        own.reserve(reduced.plan->trace.size());
        for (const State& s : reduced.plan->trace)
            own.push_back(search::project(s, rel));
        if (lifted != own) {
            report.outcome = VerifyOutcome::Fail;
            report.detail = "scoped plan induces a different relevant-fluent trace "
                            "in the original problem";
            return report;
        }
    } catch (const ReplayException& e) {
        report.outcome = VerifyOutcome::Fail;
        report.detail = e.what();
        return report;
    }

    report.outcome = VerifyOutcome::Pass;
    report.detail = "optimal cost " + to_string(original.plan->cost);
    return report;
}

const char* to_string(VerifyOutcome outcome) {
    switch (outcome) {
    case VerifyOutcome::Pass: return "PASS";
    case VerifyOutcome::Fail: return "FAIL";
    case VerifyOutcome::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

}  // namespace scoper
