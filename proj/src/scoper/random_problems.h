#pragma once

#include "scoper/problem.h"

#include <cstdint>

namespace scoper {

// Seeded generator of micro problems small enough for exhaustive search:
// at most 6 fluents (propositional or numeric with domains of size <= 4),
// at most 12 single-CAE actions, a goal over at most 2 fluents and a total
// random initial state. Equal seeds produce identical problems.
PlanningProblem random_micro_problem(std::uint64_t seed);

}  // namespace scoper
