#include "scoper/problem.h"

#include <random>
#include <set>

namespace scoper {

std::optional<FluentId> PlanningProblem::fluent_id(const std::string& name) const {
    auto it = fluent_index_.find(name);
    if (it == fluent_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<ActionId> PlanningProblem::action_id(const std::string& name) const {
    auto it = action_index_.find(name);
    if (it == action_index_.end())
        return std::nullopt;
    return it->second;
}

FluentId ProblemBuilder::add_fluent(const std::string& name, FluentKind kind,
                                    std::optional<DomainBound> bound) {
    if (problem_.fluent_index_.count(name))
        throw InvalidProblemError("duplicate fluent name: " + name);
    if (kind == FluentKind::Propositional && bound)
        throw InvalidProblemError("propositional fluent cannot carry a domain bound: " +
                                  name);
    if (bound && bound->lo > bound->hi)
        throw InvalidProblemError("empty domain bound for fluent: " + name);
    FluentId id = static_cast<FluentId>(problem_.fluents_.size());
    problem_.fluents_.push_back(Fluent{name, kind, bound});
    problem_.fluent_index_[name] = id;
    return id;
}

ActionId ProblemBuilder::add_action(const std::string& name) {
    if (problem_.action_index_.count(name))
        throw InvalidProblemError("duplicate action name: " + name);
    ActionId id = static_cast<ActionId>(problem_.action_names_.size());
    problem_.action_names_.push_back(name);
    problem_.action_index_[name] = id;
    return id;
}

void ProblemBuilder::check_fluent_ids(const std::set<FluentId>& ids,
                                      const std::string& what) const {
    for (FluentId f : ids)
        if (f < 0 || f >= num_fluents())
            throw InvalidProblemError("undeclared fluent id " + std::to_string(f) +
                                      " in " + what);
}

void ProblemBuilder::add_transition(Formula precondition, ActionId action,
                                    std::map<FluentId, EffectFn> effects,
                                    Rational cost) {
    if (action < 0 || action >= static_cast<ActionId>(problem_.action_names_.size()))
        throw InvalidProblemError("undeclared action id " + std::to_string(action));
    if (cost < Rational(0))
        throw InvalidProblemError("negative cost on action " +
                                  problem_.action_names_[action]);
    check_fluent_ids(precondition.vars(),
                     "precondition of " + problem_.action_names_[action]);
    std::set<FluentId> read;
    for (const auto& [f, effect] : effects) {
        if (f < 0 || f >= num_fluents())
            throw InvalidProblemError("effect on undeclared fluent id " +
                                      std::to_string(f));
        const Fluent& target = problem_.fluents_[f];
        bool is_prop = target.kind == FluentKind::Propositional;
        if (effect.is_boolean() != is_prop)
            throw InvalidProblemError("effect kind mismatch on fluent " + target.name);
        effect.collect_read_vars(read);
    }
    check_fluent_ids(read, "effect expressions of " + problem_.action_names_[action]);
    for (FluentId f : read)
        if (problem_.fluents_[f].kind != FluentKind::Numeric)
            throw InvalidProblemError("effect expression reads propositional fluent " +
                                      problem_.fluents_[f].name);
    problem_.transitions_.push_back(
        CaeTriple{std::move(precondition), action, std::move(effects), std::move(cost)});
}

void ProblemBuilder::set_initial(FluentId f, Value v) {
    if (f < 0 || f >= num_fluents())
        throw InvalidProblemError("initial value for undeclared fluent id " +
                                  std::to_string(f));
    if (!v.matches(problem_.fluents_[f].kind))
        throw InvalidProblemError("initial value kind mismatch on fluent " +
                                  problem_.fluents_[f].name);
    initial_.insert_or_assign(f, std::move(v));
}

void ProblemBuilder::set_goal(Formula goal) {
    check_fluent_ids(goal.vars(), "goal");
    problem_.goal_ = std::move(goal);
}

PlanningProblem ProblemBuilder::build() {
    std::vector<Value> values;
    values.reserve(problem_.fluents_.size());
    for (FluentId f = 0; f < num_fluents(); ++f) {
        auto it = initial_.find(f);
        if (it == initial_.end())
            throw InvalidProblemError("initial state is not total: no value for " +
                                      problem_.fluents_[f].name);
        values.push_back(it->second);
    }
    problem_.initial_state_ = State(std::move(values));
    return std::move(problem_);
}

State apply(const CaeTriple& t, const State& s) {
    if (!t.precondition.eval(s))
        throw PreconditionViolatedError("precondition does not hold");
    State next = s;
    for (const auto& [f, effect] : t.effects)
        next.set(f, effect.apply(s.at(f), s));
    return next;
}

State random_state(const PlanningProblem& pp, std::mt19937_64& rng) {
    std::vector<Value> values;
    values.reserve(pp.fluents().size());
    for (const Fluent& fl : pp.fluents()) {
        if (fl.kind == FluentKind::Propositional) {
            values.push_back(Value::boolean(rng() % 2 == 0));
        } else {
            long long lo = fl.bound ? fl.bound->lo : -10;
            long long hi = fl.bound ? fl.bound->hi : 10;
            std::uniform_int_distribution<long long> dist(lo, hi);
            values.push_back(Value::numeric(dist(rng)));
        }
    }
    return State(std::move(values));
}

std::optional<std::pair<int, int>> find_mutex_violation(const PlanningProblem& pp,
                                                        int num_samples,
                                                        std::uint64_t seed) {
    // Group transitions by action symbol; only shared symbols need checking.
    std::map<ActionId, std::vector<int>> by_action;
    for (int i = 0; i < static_cast<int>(pp.transitions().size()); ++i)
        by_action[pp.transitions()[i].action].push_back(i);
    bool any_shared = false;
    for (const auto& [a, group] : by_action)
        any_shared |= group.size() > 1;
    if (!any_shared)
        return std::nullopt;

    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < num_samples; ++sample) {
        State s = random_state(pp, rng);
        for (const auto& [a, group] : by_action) {
            if (group.size() < 2)
                continue;
            int satisfied = -1;
            for (int idx : group) {
                if (pp.transitions()[idx].precondition.eval(s)) {
                    if (satisfied >= 0)
                        return std::make_pair(satisfied, idx);
                    satisfied = idx;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace scoper
