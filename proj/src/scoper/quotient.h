#pragma once

#include "scoper/problem.h"

#include <set>
#include <vector>

namespace scoper {

// Merged representative of a class of CAE triples with identical effects on
// the kept fluent set J: disjunctive precondition, union of action symbols,
// the shared effects restricted to J, and the set of fluents outside J that
// some member may change (bookkeeping only, never part of emitted tasks).
struct QuotientCae {
    Formula precondition;
    std::vector<ActionId> actions;         // sorted, unique
    std::map<FluentId, EffectFn> effects;  // restricted to J, nonempty
    std::vector<FluentId> side_effects;    // sorted, disjoint from J
    std::vector<int> members;              // indices into the source transition list

    bool affects(const std::set<FluentId>& fluents) const {
        for (const auto& [f, e] : effects)
            if (fluents.count(f))
                return true;
        return false;
    }
};

// Partitions transitions by equality of their effects restricted to j,
// discards parts with no effect on j, and merges each remaining part into one
// QuotientCae. Output order is deterministic: ascending by canonical effect
// signature.
std::vector<QuotientCae> reduce_transitions(const std::vector<CaeTriple>& transitions,
                                            const std::set<FluentId>& j);

}  // namespace scoper
