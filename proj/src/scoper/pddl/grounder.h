#pragma once

#include "scoper/pddl/ast.h"
#include "scoper/problem.h"

namespace scoper::pddl {

struct GroundOptions {
    long long max_grounded_actions = 1000000;
};

// Where each grounded fluent and action came from, for object-level deletion
// when the scoped task is written back to PDDL.
struct GroundingMap {
    std::vector<std::vector<std::string>> fluent_objects;  // by FluentId

    struct ActionOrigin {
        std::string schema;
        std::vector<std::string> args;
    };
    std::vector<ActionOrigin> action_origins;  // by ActionId
};

struct GroundedTask {
    PlanningProblem problem;
    GroundingMap map;
};

// Substitutes every type-compatible object tuple into every action schema,
// expanding quantifiers into conjunctions and disjunctions. Static predicates
// (never affected by any action) and object equalities are folded to
// constants; grounded actions whose precondition folds to False are dropped.
// Propositional fluents missing from init are false; numeric fluents must be
// assigned in init to be referenced at all.
GroundedTask ground(const Domain& domain, const Problem& problem,
                    const GroundOptions& options = {});

}  // namespace scoper::pddl
