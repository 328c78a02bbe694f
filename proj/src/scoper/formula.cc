#include "scoper/formula.h"

#include <cassert>
#include <utility>

namespace scoper {

struct Formula::Node {
    Kind kind;
    std::vector<Literal> literal;   // Lit only (0 or 1 entries)
    std::vector<Formula> children;  // Not (1), And/Or (any)
};

Formula Formula::truth() {
    static const auto node = std::make_shared<const Node>(Node{Kind::True, {}, {}});
    return Formula(node);
}

Formula Formula::falsity() {
    static const auto node = std::make_shared<const Node>(Node{Kind::False, {}, {}});
    return Formula(node);
}

Formula Formula::literal(Literal lit) {
    if (lit.is_constant())
        return lit.constant_truth() ? truth() : falsity();
    auto node = std::make_shared<const Node>(
        Node{Kind::Lit, {std::move(lit)}, {}});
    return Formula(std::move(node));
}

Formula Formula::negation(Formula f) {
    switch (f.kind()) {
    case Kind::True:
        return falsity();
    case Kind::False:
        return truth();
    case Kind::Lit:
        return literal(f.lit().negated());
    case Kind::Not:
        return f.children().front();
    default: {
        auto node = std::make_shared<const Node>(
            Node{Kind::Not, {}, {std::move(f)}});
        return Formula(std::move(node));
    }
    }
}

Formula Formula::conjunction(std::vector<Formula> parts) {
    std::vector<Formula> flat;
    for (Formula& p : parts) {
        if (p.is_true())
            continue;
        if (p.is_false())
            return falsity();
        if (p.kind() == Kind::And) {
            for (const Formula& c : p.children())
                flat.push_back(c);
        } else {
            flat.push_back(std::move(p));
        }
    }
    if (flat.empty())
        return truth();
    if (flat.size() == 1)
        return flat.front();
    auto node = std::make_shared<const Node>(Node{Kind::And, {}, std::move(flat)});
    return Formula(std::move(node));
}

Formula Formula::disjunction(std::vector<Formula> parts) {
    std::vector<Formula> flat;
    for (Formula& p : parts) {
        if (p.is_false())
            continue;
        if (p.is_true())
            return truth();
        if (p.kind() == Kind::Or) {
            for (const Formula& c : p.children())
                flat.push_back(c);
        } else {
            flat.push_back(std::move(p));
        }
    }
    // Drop structurally identical disjuncts, keeping first occurrence order.
    std::vector<Formula> unique;
    for (Formula& p : flat) {
        bool seen = false;
        for (const Formula& u : unique) {
            if (u == p) {
                seen = true;
                break;
            }
        }
        if (!seen)
            unique.push_back(std::move(p));
    }
    if (unique.empty())
        return falsity();
    if (unique.size() == 1)
        return unique.front();
    auto node = std::make_shared<const Node>(Node{Kind::Or, {}, std::move(unique)});
    return Formula(std::move(node));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Literal& Formula::lit() const {
    assert(node_->kind == Kind::Lit);
    return node_->literal.front();
}

const std::vector<Formula>& Formula::children() const { return node_->children; }

bool Formula::eval(const State& s) const {
    switch (kind()) {
    case Kind::True:
        return true;
    case Kind::False:
        return false;
    case Kind::Lit:
        return lit().eval(s);
    case Kind::Not:
        return !children().front().eval(s);
    case Kind::And:
        for (const Formula& c : children())
            if (!c.eval(s))
                return false;
        return true;
    case Kind::Or:
        for (const Formula& c : children())
            if (c.eval(s))
                return true;
        return false;
    }
    return false;
}

void Formula::collect_vars(std::set<FluentId>& out) const {
    switch (kind()) {
    case Kind::True:
    case Kind::False:
        return;
    case Kind::Lit:
        lit().collect_vars(out);
        return;
    default:
        for (const Formula& c : children())
            c.collect_vars(out);
    }
}

std::set<FluentId> Formula::vars() const {
    std::set<FluentId> out;
    collect_vars(out);
    return out;
}

int Formula::compare(const Formula& o) const {
    if (node_ == o.node_)
        return 0;
    if (kind() != o.kind())
        return static_cast<int>(kind()) < static_cast<int>(o.kind()) ? -1 : 1;
    if (kind() == Kind::Lit)
        return lit().compare(o.lit());
    const auto& a = children();
    const auto& b = o.children();
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = a[i].compare(b[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

std::string Formula::to_string(
    const std::function<std::string(FluentId)>& fluent_name) const {
    switch (kind()) {
    case Kind::True:
        return "true";
    case Kind::False:
        return "false";
    case Kind::Lit:
        return lit().to_string(fluent_name);
    case Kind::Not:
        return "(not " + children().front().to_string(fluent_name) + ")";
    case Kind::And:
    case Kind::Or: {
        std::string out = kind() == Kind::And ? "(and" : "(or";
        for (const Formula& c : children())
            out += " " + c.to_string(fluent_name);
        return out + ")";
    }
    }
    return "";
}

}  // namespace scoper
