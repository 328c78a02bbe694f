#pragma once

#include "scoper/pddl/ast.h"

#include <utility>

namespace scoper::pddl {

Domain parse_domain(const std::string& text,
                    const std::string& filename = "<domain>");
Problem parse_problem(const std::string& text,
                      const std::string& filename = "<problem>");

// Parses both files and checks that the problem names the domain.
std::pair<Domain, Problem> parse_pddl(const std::string& domain_text,
                                      const std::string& problem_text,
                                      const std::string& domain_filename = "<domain>",
                                      const std::string& problem_filename = "<problem>");

}  // namespace scoper::pddl
