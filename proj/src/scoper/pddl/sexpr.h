#pragma once

#include "scoper/errors.h"

#include <string>
#include <vector>

namespace scoper::pddl {

// Parsed s-expression with source line tracking. Atoms are lower-cased at
// tokenization (PDDL names are case-insensitive). Retained raw trees are the
// basis for emission, so printing a Sexpr must re-parse to the same tree.
struct Sexpr {
    enum class Kind { Atom, List };

    Kind kind = Kind::Atom;
    std::string atom;
    std::vector<Sexpr> items;
    int line = 0;

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_list() const { return kind == Kind::List; }

    // Head symbol of a list, or "" when the list is empty or headed by a
    // sublist.
    const std::string& head() const {
        static const std::string empty;
        if (!is_list() || items.empty() || !items[0].is_atom())
            return empty;
        return items[0].atom;
    }

    std::string to_string() const;
};

// Parses a whole file of s-expressions; ';' starts a comment through end of
// line. Throws ParseError with the file name and line on mismatched or
// missing parentheses.
std::vector<Sexpr> parse_sexprs(const std::string& text,
                                const std::string& filename = "<pddl>");

}  // namespace scoper::pddl
