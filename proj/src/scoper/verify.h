#pragma once

#include "scoper/scoping.h"
#include "scoper/search/planner.h"

#include <optional>
#include <string>

namespace scoper {

struct VerifyOptions {
    search::SearchLimits limits;
    ScopeOptions scope_options;
};

enum class VerifyOutcome { Pass, Fail, Inconclusive };

struct VerifyReport {
    VerifyOutcome outcome = VerifyOutcome::Inconclusive;
    std::string detail;
    std::optional<Rational> original_cost;
    std::optional<Rational> scoped_cost;
    ScopeResult scope;
};

// Executable form of the soundness and optimality-completeness guarantees on
// one instance: scope the problem, solve both versions optimally, compare
// costs, replay the scoped plan in the original problem and compare the
// traces projected onto the relevant fluents. Structural invariants of the
// scope result (partition, goal coverage, causal-link separation, the
// scoped-check itself) are validated as well, so a corrupted scoper fails
// even when costs happen to agree.
VerifyReport verify_instance(const PlanningProblem& pp,
                             const VerifyOptions& options = {});

const char* to_string(VerifyOutcome outcome);

}  // namespace scoper
