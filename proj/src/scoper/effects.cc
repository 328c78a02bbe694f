#include "scoper/effects.h"

#include <cassert>

namespace scoper {

EffectFn EffectFn::assign(Value v) {
    return EffectFn(Kind::AssignConst, std::move(v));
}

EffectFn EffectFn::assign_expr(LinearExpr e) {
    if (e.is_constant())
        return assign(Value::numeric(e.constant()));
    return EffectFn(Kind::AssignExpr, std::move(e));
}

EffectFn EffectFn::increase(LinearExpr e) {
    return EffectFn(Kind::Increase, std::move(e));
}

EffectFn EffectFn::decrease(LinearExpr e) {
    return EffectFn(Kind::Increase, e.negated());
}

Value EffectFn::apply(const Value& old, const State& pre) const {
    switch (kind_) {
    case Kind::AssignConst:
        return value();
    case Kind::AssignExpr:
        return Value::numeric(expr().eval(pre));
    case Kind::Increase:
        return Value::numeric(old.as_numeric() + expr().eval(pre));
    }
    assert(false);
    return old;
}

void EffectFn::collect_read_vars(std::set<FluentId>& out) const {
    if (kind_ != Kind::AssignConst)
        expr().collect_vars(out);
}

int EffectFn::compare(const EffectFn& o) const {
    if (kind_ != o.kind_)
        return static_cast<int>(kind_) < static_cast<int>(o.kind_) ? -1 : 1;
    if (kind_ == Kind::AssignConst)
        return value().compare(o.value());
    return expr().compare(o.expr());
}

std::string EffectFn::to_string(
    const std::function<std::string(FluentId)>& fluent_name) const {
    switch (kind_) {
    case Kind::AssignConst:
        return ":= " + value().to_string();
    case Kind::AssignExpr:
        return ":= " + expr().to_string(fluent_name);
    case Kind::Increase:
        return "+= " + expr().to_string(fluent_name);
    }
    return "";
}

}  // namespace scoper
