#pragma once

#include "scoper/problem.h"

#include <string>
#include <utility>
#include <vector>

namespace scoper::sas {

struct SasVariable {
    std::string name;
    int axiom_layer = -1;
    int domain_size = 0;
    std::vector<std::string> value_names;
};

struct SasOperator {
    struct PrePost {
        int var = 0;
        int pre = -1;  // -1: no precondition on var
        int post = 0;
    };

    std::string name;
    std::vector<std::pair<int, int>> prevail;
    std::vector<PrePost> pre_posts;
    long long cost = 1;
    std::string raw;  // verbatim block, begin_operator through end_operator
};

// Parsed translator-output task, version 3. Sections before and after the
// operator list are kept verbatim so emission can do byte-exact surgery on
// the operator section alone. Mutex groups and value names are preserved for
// re-emission but never consulted by scoping.
struct SasTask {
    bool metric = false;
    std::vector<SasVariable> variables;
    std::vector<std::vector<std::pair<int, int>>> mutex_groups;
    std::vector<int> initial_values;
    std::vector<std::pair<int, int>> goal;
    std::vector<SasOperator> operators;

    std::string prefix_raw;  // everything before the operator count line
    std::string count_raw;   // original operator count line
    std::string suffix_raw;  // axiom section through end of file
};

// Strict section-by-section parse. Throws ParseError on malformed input or a
// version other than 3, AxiomsUnsupportedError when the task declares axioms
// or derived variables, and UnsupportedFeatureError on conditional effects.
SasTask parse_sas(const std::string& text, const std::string& filename = "<sas>");

// Reproduces the input byte for byte.
std::string serialize_sas(const SasTask& task);

// Byte-exact for every retained section: operators with keep[i] false are
// dropped and the operator count line is updated; all other bytes are the
// original ones.
std::string serialize_sas(const SasTask& task, const std::vector<bool>& keep_operator);

// Every variable becomes a numeric fluent whose domainBound records the
// declared domain size; every operator becomes exactly one CAE triple whose
// precondition conjoins the prevail and pre-value equalities. Operator costs
// apply only when the metric flag is set; otherwise costs are 1.
PlanningProblem sas_to_problem(const SasTask& task);

// Removes operators whose index is not in retained (ActionIds from
// sas_to_problem equal operator indices).
std::string emit_sas(const SasTask& task, const std::vector<ActionId>& retained);

}  // namespace scoper::sas
