#pragma once

#include "scoper/effects.h"
#include "scoper/formula.h"
#include "scoper/state.h"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace scoper {

// One guarded deterministic transition rule: precondition, action symbol,
// per-fluent effect functions and a nonnegative cost. An empty effects map
// declares a no-op.
struct CaeTriple {
    Formula precondition;
    ActionId action = -1;
    std::map<FluentId, EffectFn> effects;
    Rational cost{1};
};

class ProblemBuilder;

// Grounded planning problem: fluents, action symbols, CAE transitions, a
// total initial state and a goal condition. Immutable after build(); safe to
// share across threads.
class PlanningProblem {
public:
    PlanningProblem() = default;  // empty problem; populate via ProblemBuilder

    int num_fluents() const { return static_cast<int>(fluents_.size()); }
    const std::vector<Fluent>& fluents() const { return fluents_; }
    const Fluent& fluent(FluentId f) const { return fluents_.at(f); }
    std::optional<FluentId> fluent_id(const std::string& name) const;

    int num_actions() const { return static_cast<int>(action_names_.size()); }
    const std::vector<std::string>& action_names() const { return action_names_; }
    const std::string& action_name(ActionId a) const { return action_names_.at(a); }
    std::optional<ActionId> action_id(const std::string& name) const;

    const std::vector<CaeTriple>& transitions() const { return transitions_; }
    const State& initial_state() const { return initial_state_; }
    const Formula& goal() const { return goal_; }

private:
    friend class ProblemBuilder;

    std::vector<Fluent> fluents_;
    std::unordered_map<std::string, FluentId> fluent_index_;
    std::vector<std::string> action_names_;
    std::unordered_map<std::string, ActionId> action_index_;
    std::vector<CaeTriple> transitions_;
    State initial_state_;
    Formula goal_;
};

// Validating constructor for PlanningProblem. Checks referential integrity,
// kind consistency of values and effects, totality of the initial state and
// nonnegative costs; throws InvalidProblemError on violation.
class ProblemBuilder {
public:
    FluentId add_fluent(const std::string& name, FluentKind kind,
                        std::optional<DomainBound> bound = std::nullopt);
    ActionId add_action(const std::string& name);

    void add_transition(Formula precondition, ActionId action,
                        std::map<FluentId, EffectFn> effects,
                        Rational cost = Rational(1));
    void set_initial(FluentId f, Value v);
    void set_goal(Formula goal);

    int num_fluents() const { return static_cast<int>(problem_.fluents_.size()); }
    const Fluent& fluent(FluentId f) const { return problem_.fluents_.at(f); }

    PlanningProblem build();

private:
    void check_fluent_ids(const std::set<FluentId>& ids, const std::string& what) const;

    PlanningProblem problem_;
    std::map<FluentId, Value> initial_;
};

// Fires t on s: fluents absent from t.effects keep their value; all effect
// expressions read the frozen pre-transition state. Throws
// PreconditionViolatedError if t's precondition does not hold in s.
State apply(const CaeTriple& t, const State& s);

// Uniform random total state: propositional fluents coin-flipped, numeric
// ones drawn from their bound (or a small default window when unbounded).
State random_state(const PlanningProblem& pp, std::mt19937_64& rng);

// Randomized spot check of the mutual-exclusivity requirement for CAE triples
// sharing one action symbol. Returns indices of a violating transition pair,
// or nullopt if no sampled state satisfies two preconditions at once.
std::optional<std::pair<int, int>> find_mutex_violation(const PlanningProblem& pp,
                                                        int num_samples,
                                                        std::uint64_t seed);

}  // namespace scoper
