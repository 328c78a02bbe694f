#include "scoper/scoping.h"

#include <algorithm>
#include <cassert>

namespace scoper {

namespace {

std::string fresh_name(const PlanningProblem& pp, std::string base) {
    while (pp.fluent_id(base) || pp.action_id(base))
        base += "'";
    return base;
}

std::set<FluentId> side_effect_union(const std::vector<QuotientCae>& reduced) {
    std::set<FluentId> side;
    for (const QuotientCae& q : reduced)
        side.insert(q.side_effects.begin(), q.side_effects.end());
    return side;
}

// One clause check shared by is_scoped and the fixed-point loop: a clause is
// acceptable iff it is over j, or true in s0 and disjoint from the side
// effects of the reduced system.
bool clause_acceptable(const Clause& clause, const State& s0,
                       const std::set<FluentId>& j,
                       const std::set<FluentId>& side_union,
                       const ScopeOptions& options) {
    if (clause.over(j))
        return true;
    if (!options.mutate_drop_initial_state_check && !clause_true_in(clause, s0))
        return false;
    for (FluentId f : clause.vars())
        if (side_union.count(f))
            return false;
    return true;
}

}  // namespace

GoalAugmented augment_with_goal(const PlanningProblem& pp) {
    ProblemBuilder builder;
    for (const Fluent& f : pp.fluents())
        builder.add_fluent(f.name, f.kind, f.bound);
    for (const std::string& name : pp.action_names())
        builder.add_action(name);

    GoalAugmented out;
    out.goal_fluent = builder.add_fluent(fresh_name(pp, "goal-reached"),
                                         FluentKind::Propositional);
    ActionId goal_action = builder.add_action(fresh_name(pp, "do-goal"));

    for (const CaeTriple& t : pp.transitions())
        builder.add_transition(t.precondition, t.action, t.effects, t.cost);
    builder.add_transition(pp.goal(), goal_action,
                           {{out.goal_fluent, EffectFn::set_true()}}, Rational(0));

    for (FluentId f = 0; f < pp.num_fluents(); ++f)
        builder.set_initial(f, pp.initial_state().at(f));
    builder.set_initial(out.goal_fluent, Value::boolean(false));
    builder.set_goal(pp.goal());

    out.goal_action = goal_action;
    out.problem = builder.build();
    return out;
}

ScopedCheck is_scoped(const std::vector<QuotientCae>& reduced, const State& s0,
                      const std::set<FluentId>& j, const ScopeOptions& options) {
    std::set<FluentId> side_union = side_effect_union(reduced);
    for (const QuotientCae& q : reduced) {
        Cnf cnf = to_cnf(q.precondition, options.clause_cap);
        for (const Clause& clause : cnf.clauses)
            if (!clause_acceptable(clause, s0, j, side_union, options))
                return ScopedCheck{clause};
    }
    return ScopedCheck{};
}

ScopeResult scope_task(const PlanningProblem& pp, const ScopeOptions& options) {
    GoalAugmented aug = augment_with_goal(pp);
    const State& s0 = aug.problem.initial_state();
    const std::vector<CaeTriple>& transitions = aug.problem.transitions();

    std::set<FluentId> j{aug.goal_fluent};
    std::vector<QuotientCae> reduced = reduce_transitions(transitions, j);
    int iterations = 1;

    std::vector<Cnf> cnfs;
    while (true) {
        cnfs.clear();
        cnfs.reserve(reduced.size());
        for (const QuotientCae& q : reduced)
            cnfs.push_back(to_cnf(q.precondition, options.clause_cap));
        std::set<FluentId> side_union = side_effect_union(reduced);

        bool scoped = true;
        for (std::size_t i = 0; i < reduced.size() && scoped; ++i)
            for (const Clause& clause : cnfs[i].clauses)
                if (!clause_acceptable(clause, s0, j, side_union, options)) {
                    scoped = false;
                    break;
                }
        if (scoped)
            break;

        // J_aff: relevant fluents plus everything the reduced system may touch
        // outside of them.
        std::set<FluentId> j_aff = j;
        j_aff.insert(side_union.begin(), side_union.end());

        std::set<FluentId> to_add;
        for (const Cnf& cnf : cnfs) {
            for (const Clause& clause : cnf.clauses) {
                std::set<FluentId> clause_vars = clause.vars();
                bool initially_false = !options.mutate_drop_initial_state_check &&
                                       !clause_true_in(clause, s0);
                bool touches_affected =
                    std::any_of(clause_vars.begin(), clause_vars.end(),
                                [&](FluentId f) { return j_aff.count(f) > 0; });
                if (initially_false || touches_affected)
                    to_add.insert(clause_vars.begin(), clause_vars.end());
            }
        }

        std::size_t before = j.size();
        j.insert(to_add.begin(), to_add.end());
        if (j.size() == before)
            throw Error("scoping made no progress; this cannot happen on a "
                        "well-formed problem");
        reduced = reduce_transitions(transitions, j);
        ++iterations;
    }

    ScopeResult result;
    result.iterations = iterations;

    // Classification pass over the terminal system. Clauses over J were fully
    // absorbed into the relevant set; the remaining clauses are exactly the
    // causally linked ones.
    std::set<FluentId> cl;
    assert(cnfs.size() == reduced.size());
    for (std::size_t i = 0; i < reduced.size(); ++i)
        for (const Clause& clause : cnfs[i].clauses)
            if (!clause.over(j))
                for (FluentId f : clause.vars())
                    if (!j.count(f))
                        cl.insert(f);

    for (FluentId f : j)
        if (f != aug.goal_fluent)
            result.j_rel.push_back(f);
    result.j_cl.assign(cl.begin(), cl.end());
    for (FluentId f = 0; f < pp.num_fluents(); ++f)
        if (!j.count(f) && !cl.count(f))
            result.j_irrel.push_back(f);

    // Strip the dummy goal part; every other part survives as a quotient over
    // the relevant fluents.
    std::set<ActionId> retained;
    for (QuotientCae& q : reduced) {
        if (q.effects.count(aug.goal_fluent)) {
            assert(q.members.size() == 1 &&
                   q.members.front() == static_cast<int>(transitions.size()) - 1);
            continue;
        }
        retained.insert(q.actions.begin(), q.actions.end());
        result.quotient_transitions.push_back(std::move(q));
    }
    result.retained_actions.assign(retained.begin(), retained.end());
    return result;
}

PlanningProblem restrict_to_actions(const PlanningProblem& pp,
                                    const std::vector<ActionId>& keep) {
    std::set<ActionId> kept(keep.begin(), keep.end());
    ProblemBuilder builder;
    for (const Fluent& f : pp.fluents())
        builder.add_fluent(f.name, f.kind, f.bound);
    for (const std::string& name : pp.action_names())
        builder.add_action(name);
    for (const CaeTriple& t : pp.transitions())
        if (kept.count(t.action))
            builder.add_transition(t.precondition, t.action, t.effects, t.cost);
    for (FluentId f = 0; f < pp.num_fluents(); ++f)
        builder.set_initial(f, pp.initial_state().at(f));
    builder.set_goal(pp.goal());
    return builder.build();
}

bool causal_link_separation_holds(const ScopeResult& scope) {
    std::set<FluentId> rel = scope.j_rel_set();
    std::set<FluentId> cl = scope.j_cl_set();
    for (const QuotientCae& q : scope.quotient_transitions) {
        if (!q.affects(rel))
            continue;
        for (FluentId f : q.side_effects)
            if (cl.count(f))
                return false;
    }
    return true;
}

}  // namespace scoper
