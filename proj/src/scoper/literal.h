#pragma once

#include "scoper/linear_expr.h"

#include <functional>
#include <set>
#include <string>
#include <variant>

namespace scoper {

enum class CmpOp { Lt, Le, Eq, Ne, Ge, Gt };

// Canonical comparison shapes. Every numeric literal is normalized to
//   expr <op> 0   with op in {<, <=, =}
// plus a polarity bit; >=, > and != become negated <, <= and =. The leading
// coefficient of expr is scaled to +1 so syntactically different spellings of
// the same comparison share one atom. Complementary literals then differ only
// in polarity, which is what clause-level tautology elimination keys on.
enum class CmpKind { Less, LessEq, Eq };

class Literal {
public:
    static Literal prop(FluentId f, bool positive = true);
    static Literal compare(const LinearExpr& lhs, CmpOp op, const LinearExpr& rhs);

    bool is_prop() const { return std::holds_alternative<FluentId>(atom_); }
    bool positive() const { return positive_; }

    FluentId fluent() const { return std::get<FluentId>(atom_); }
    const LinearExpr& expr() const { return std::get<NumAtom>(atom_).expr; }
    CmpKind cmp() const { return std::get<NumAtom>(atom_).cmp; }

    Literal negated() const;

    // Constant comparison: a numeric atom without variables.
    bool is_constant() const;
    bool constant_truth() const;

    bool eval(const State& s) const;
    void collect_vars(std::set<FluentId>& out) const;
    std::set<FluentId> vars() const;

    bool same_atom(const Literal& o) const { return compare_atoms(o) == 0; }
    int compare_atoms(const Literal& o) const;
    int compare(const Literal& o) const;
    bool operator==(const Literal& o) const { return compare(o) == 0; }
    bool operator<(const Literal& o) const { return compare(o) < 0; }

    std::string to_string(
        const std::function<std::string(FluentId)>& fluent_name) const;

private:
    struct NumAtom {
        LinearExpr expr;
        CmpKind cmp;
    };

    Literal(std::variant<FluentId, NumAtom> atom, bool positive)
        : atom_(std::move(atom)), positive_(positive) {}

    std::variant<FluentId, NumAtom> atom_;
    bool positive_ = true;
};

}  // namespace scoper
