#pragma once

#include "scoper/pddl/grounder.h"
#include "scoper/scoping.h"

namespace scoper::pddl {

struct EmittedPddl {
    std::string domain_text;
    std::string problem_text;
    std::vector<std::string> removed_objects;
    std::vector<std::string> removed_schemas;
};

// Writes the scoped task back to PDDL: problem objects that occur in no
// relevant or causally linked fluent are removed, together with init entries
// that mention them; action schemas with no retained grounding are removed
// from the domain. Causally linked fluents themselves are kept, since
// deleting them would leave retained actions ill defined. Throws
// EmitInconsistencyError if a retained grounding mentions a removed object.
EmittedPddl emit_pddl(const Domain& domain, const Problem& problem,
                      const GroundedTask& grounded, const ScopeResult& scope);

}  // namespace scoper::pddl
