#pragma once

#include "scoper/pddl/sexpr.h"
#include "scoper/rational.h"

#include <optional>
#include <string>
#include <vector>

namespace scoper::pddl {

struct TypedName {
    std::string name;
    std::string type = "object";
};

struct PredicateDecl {
    std::string name;
    std::vector<TypedName> params;
};

struct FunctionDecl {
    std::string name;
    std::vector<TypedName> params;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> params;
    std::optional<Sexpr> precondition;  // absent or empty list means True
    Sexpr effect;
    Sexpr raw;  // the full (:action ...) form, reprinted on emission
};

// Lifted PDDL 2.1 level 2 domain without conditional effects, durative
// actions or derived predicates; those are rejected at parse time.
struct Domain {
    std::string name;
    std::vector<std::string> requirements;
    std::vector<std::pair<std::string, std::string>> types;  // type -> parent
    std::vector<PredicateDecl> predicates;
    std::vector<FunctionDecl> functions;
    std::vector<TypedName> constants;
    std::vector<ActionSchema> actions;

    std::optional<Sexpr> raw_requirements;
    std::optional<Sexpr> raw_types;
    std::optional<Sexpr> raw_predicates;
    std::optional<Sexpr> raw_functions;
    std::optional<Sexpr> raw_constants;
};

struct InitAssignment {
    std::string function;
    std::vector<std::string> args;
    Rational value;
};

struct Problem {
    std::string name;
    std::string domain_name;
    std::vector<TypedName> objects;
    std::vector<std::vector<std::string>> init_atoms;  // predicate + args
    std::vector<InitAssignment> init_assignments;
    std::vector<Sexpr> init_raw;  // every init entry verbatim, in order
    Sexpr goal;
    std::optional<Sexpr> metric_raw;  // must be (minimize (total-cost)) if present
};

}  // namespace scoper::pddl
