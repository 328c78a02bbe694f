#pragma once

#include "scoper/errors.h"
#include "scoper/formula.h"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scoper {

inline constexpr std::size_t kDefaultClauseCap = 1024;

// Disjunction of literals. Canonical: sorted, duplicates removed. A clause
// holding complementary literals over the same atom is the constant True and
// is never materialized; make() reports it as nullopt instead.
class Clause {
public:
    static std::optional<Clause> make(std::vector<Literal> literals);

    const std::vector<Literal>& literals() const { return literals_; }
    bool empty() const { return literals_.empty(); }

    bool eval(const State& s) const;
    std::set<FluentId> vars() const;
    bool over(const std::set<FluentId>& j) const;

    int compare(const Clause& o) const;
    bool operator==(const Clause& o) const { return compare(o) == 0; }
    bool operator<(const Clause& o) const { return compare(o) < 0; }

    std::string to_string(
        const std::function<std::string(FluentId)>& fluent_name) const;

private:
    explicit Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {}

    std::vector<Literal> literals_;
};

// Conjunction of clauses, sorted and deduplicated. An empty clause set is the
// constant True; a set containing the empty clause is unsatisfiable.
struct Cnf {
    std::vector<Clause> clauses;

    bool eval(const State& s) const;
    bool operator==(const Cnf& o) const = default;
};

// Equivalence-preserving CNF via negation normal form and distribution.
// Numeric comparisons are opaque atoms; no arithmetic reasoning happens here.
// Throws CnfBlowupError when distribution would exceed clause_cap clauses.
Cnf to_cnf(const Formula& f, std::size_t clause_cap = kDefaultClauseCap);

// True iff vars(clause) is contained in j.
bool clause_over(const Clause& clause, const std::set<FluentId>& j);

// Evaluation of the disjunction at s0.
bool clause_true_in(const Clause& clause, const State& s0);

}  // namespace scoper
