#include "scoper/cnf.h"

#include <algorithm>
#include <cassert>

namespace scoper {

std::optional<Clause> Clause::make(std::vector<Literal> literals) {
    std::sort(literals.begin(), literals.end(),
              [](const Literal& a, const Literal& b) { return a.compare(b) < 0; });
    std::vector<Literal> unique;
    for (Literal& lit : literals) {
        if (!unique.empty() && unique.back() == lit)
            continue;
        if (!unique.empty() && unique.back().same_atom(lit))
            return std::nullopt;  // complementary pair: clause is True
        unique.push_back(std::move(lit));
    }
    return Clause(std::move(unique));
}

bool Clause::eval(const State& s) const {
    for (const Literal& lit : literals_)
        if (lit.eval(s))
            return true;
    return false;
}

std::set<FluentId> Clause::vars() const {
    std::set<FluentId> out;
    for (const Literal& lit : literals_)
        lit.collect_vars(out);
    return out;
}

bool Clause::over(const std::set<FluentId>& j) const {
    for (const Literal& lit : literals_)
        for (FluentId f : lit.vars())
            if (!j.count(f))
                return false;
    return true;
}

int Clause::compare(const Clause& o) const {
    if (literals_.size() != o.literals_.size())
        return literals_.size() < o.literals_.size() ? -1 : 1;
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        int c = literals_[i].compare(o.literals_[i]);
        if (c != 0)
            return c;
    }
    return 0;
}

std::string Clause::to_string(
    const std::function<std::string(FluentId)>& fluent_name) const {
    std::string out = "{";
    for (std::size_t i = 0; i < literals_.size(); ++i) {
        if (i > 0)
            out += " | ";
        out += literals_[i].to_string(fluent_name);
    }
    return out + "}";
}

bool Cnf::eval(const State& s) const {
    for (const Clause& c : clauses)
        if (!c.eval(s))
            return false;
    return true;
}

namespace {

using ClauseSet = std::vector<Clause>;

void insert_clause(ClauseSet& set, Clause clause) {
    auto pos = std::lower_bound(set.begin(), set.end(), clause);
    if (pos == set.end() || !(*pos == clause))
        set.insert(pos, std::move(clause));
}

// Negation normal form CNF construction; `negate` pushes negation inward.
ClauseSet build(const Formula& f, bool negate, std::size_t cap) {
    switch (f.kind()) {
    case Formula::Kind::True:
        negate = !negate;
        [[fallthrough]];
    case Formula::Kind::False: {
        ClauseSet set;
        if (!negate)  // constant False: single empty clause
            set.push_back(*Clause::make({}));
        return set;
    }
    case Formula::Kind::Lit: {
        ClauseSet set;
        Literal lit = negate ? f.lit().negated() : f.lit();
        set.push_back(*Clause::make({std::move(lit)}));
        return set;
    }
    case Formula::Kind::Not:
        return build(f.children().front(), !negate, cap);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
        bool conjunctive = (f.kind() == Formula::Kind::And) != negate;
        if (conjunctive) {
            ClauseSet set;
            for (const Formula& child : f.children()) {
                for (Clause& c : build(child, negate, cap))
                    insert_clause(set, std::move(c));
                if (set.size() > cap)
                    throw CnfBlowupError(cap, set.size());
            }
            return set;
        }
        // Disjunction: distribute over the children's clause sets.
        ClauseSet acc;
        bool first = true;
        for (const Formula& child : f.children()) {
            ClauseSet next = build(child, negate, cap);
            if (first) {
                acc = std::move(next);
                first = false;
                continue;
            }
            if (acc.empty() || next.empty()) {  // one side is True
                acc.clear();
                continue;
            }
            ClauseSet product;
            for (const Clause& a : acc) {
                for (const Clause& b : next) {
                    std::vector<Literal> merged = a.literals();
                    merged.insert(merged.end(), b.literals().begin(),
                                  b.literals().end());
                    if (auto clause = Clause::make(std::move(merged)))
                        insert_clause(product, std::move(*clause));
                    if (product.size() > cap)
                        throw CnfBlowupError(cap, product.size());
                }
            }
            acc = std::move(product);
        }
        return acc;
    }
    }
    assert(false);
    return {};
}

}  // namespace

Cnf to_cnf(const Formula& f, std::size_t clause_cap) {
    return Cnf{build(f, false, clause_cap)};
}

bool clause_over(const Clause& clause, const std::set<FluentId>& j) {
    return clause.over(j);
}

bool clause_true_in(const Clause& clause, const State& s0) {
    return clause.eval(s0);
}

}  // namespace scoper
