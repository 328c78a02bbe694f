#pragma once

#include "scoper/literal.h"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace scoper {

// Immutable condition tree over literals. Factories apply cheap constant
// folding (True/False absorption, flattening of nested And/Or, folding of
// variable-free comparisons) but no logical minimization.
class Formula {
public:
    enum class Kind { True, False, Lit, Not, And, Or };

    Formula() : Formula(truth()) {}

    static Formula truth();
    static Formula falsity();
    static Formula literal(Literal lit);
    static Formula negation(Formula f);
    static Formula conjunction(std::vector<Formula> parts);
    static Formula disjunction(std::vector<Formula> parts);

    Kind kind() const;
    const Literal& lit() const;
    const std::vector<Formula>& children() const;

    bool is_true() const { return kind() == Kind::True; }
    bool is_false() const { return kind() == Kind::False; }

    bool eval(const State& s) const;
    void collect_vars(std::set<FluentId>& out) const;
    std::set<FluentId> vars() const;

    int compare(const Formula& o) const;
    bool operator==(const Formula& o) const { return compare(o) == 0; }

    std::string to_string(
        const std::function<std::string(FluentId)>& fluent_name) const;

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// The exact set of fluents syntactically mentioned in f.
inline std::set<FluentId> vars(const Formula& f) { return f.vars(); }

// Truth value of f under the total assignment s.
inline bool eval(const Formula& f, const State& s) { return f.eval(s); }

}  // namespace scoper
