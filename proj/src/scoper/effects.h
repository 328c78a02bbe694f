#pragma once

#include "scoper/linear_expr.h"

#include <functional>
#include <set>
#include <string>
#include <variant>

namespace scoper {

// Deterministic per-fluent effect function. Applying an effect reads only the
// frozen pre-transition state, so simultaneous effects of one transition
// cannot observe each other (simultaneous-assignment semantics).
//
// Decrease is accepted as a constructor but stored as Increase of the negated
// expression; together with LinearExpr term normalization this makes equality
// of effect functions a purely syntactic comparison of canonical forms.
class EffectFn {
public:
    enum class Kind { AssignConst, AssignExpr, Increase };

    static EffectFn assign(Value v);
    static EffectFn assign_expr(LinearExpr e);  // constant expr folds to AssignConst
    static EffectFn increase(LinearExpr e);
    static EffectFn decrease(LinearExpr e);
    static EffectFn set_true() { return assign(Value::boolean(true)); }
    static EffectFn set_false() { return assign(Value::boolean(false)); }

    Kind kind() const { return kind_; }
    const Value& value() const { return std::get<Value>(payload_); }
    const LinearExpr& expr() const { return std::get<LinearExpr>(payload_); }

    bool is_boolean() const {
        return kind_ == Kind::AssignConst && value().is_boolean();
    }

    // `old` is the fluent's value in the pre-transition state `pre`.
    Value apply(const Value& old, const State& pre) const;

    // Fluents the effect reads (not the fluent it writes).
    void collect_read_vars(std::set<FluentId>& out) const;

    int compare(const EffectFn& o) const;
    bool operator==(const EffectFn& o) const { return compare(o) == 0; }
    bool operator<(const EffectFn& o) const { return compare(o) < 0; }

    std::string to_string(
        const std::function<std::string(FluentId)>& fluent_name) const;

private:
    EffectFn(Kind kind, std::variant<Value, LinearExpr> payload)
        : kind_(kind), payload_(std::move(payload)) {}

    Kind kind_;
    std::variant<Value, LinearExpr> payload_;
};

}  // namespace scoper
