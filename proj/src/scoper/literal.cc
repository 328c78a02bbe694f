#include "scoper/literal.h"

#include <cassert>

namespace scoper {

Literal Literal::prop(FluentId f, bool positive) {
    return Literal(f, positive);
}

Literal Literal::compare(const LinearExpr& lhs, CmpOp op, const LinearExpr& rhs) {
    LinearExpr expr = lhs - rhs;
    CmpKind cmp;
    bool positive;
    switch (op) {
    case CmpOp::Lt: cmp = CmpKind::Less;   positive = true;  break;
    case CmpOp::Le: cmp = CmpKind::LessEq; positive = true;  break;
    case CmpOp::Eq: cmp = CmpKind::Eq;     positive = true;  break;
    case CmpOp::Ge: cmp = CmpKind::Less;   positive = false; break;
    case CmpOp::Gt: cmp = CmpKind::LessEq; positive = false; break;
    case CmpOp::Ne: cmp = CmpKind::Eq;     positive = false; break;
    default: assert(false); cmp = CmpKind::Eq; positive = true;
    }
    if (!expr.is_constant()) {
        const Rational& lead = expr.terms().begin()->second;
        if (lead < Rational(0)) {
            // Negating the expression flips strict/non-strict inequalities:
            // e < 0 == !(-e <= 0), e <= 0 == !(-e < 0).
            expr = expr.negated();
            switch (cmp) {
            case CmpKind::Less:   cmp = CmpKind::LessEq; positive = !positive; break;
            case CmpKind::LessEq: cmp = CmpKind::Less;   positive = !positive; break;
            case CmpKind::Eq: break;
            }
        }
        const Rational& scaled = expr.terms().begin()->second;
        if (scaled != Rational(1))
            expr *= Rational(scaled.denominator(), scaled.numerator());
    }
    return Literal(NumAtom{std::move(expr), cmp}, positive);
}

Literal Literal::negated() const {
    Literal l(*this);
    l.positive_ = !l.positive_;
    return l;
}

bool Literal::is_constant() const {
    return !is_prop() && std::get<NumAtom>(atom_).expr.is_constant();
}

bool Literal::constant_truth() const {
    const NumAtom& a = std::get<NumAtom>(atom_);
    const Rational& c = a.expr.constant();
    bool atom_true = false;
    switch (a.cmp) {
    case CmpKind::Less:   atom_true = c < Rational(0);  break;
    case CmpKind::LessEq: atom_true = c <= Rational(0); break;
    case CmpKind::Eq:     atom_true = c == Rational(0); break;
    }
    return atom_true == positive_;
}

bool Literal::eval(const State& s) const {
    if (is_prop())
        return s.at(fluent()).as_boolean() == positive_;
    const NumAtom& a = std::get<NumAtom>(atom_);
    Rational v = a.expr.eval(s);
    bool atom_true = false;
    switch (a.cmp) {
    case CmpKind::Less:   atom_true = v < Rational(0);  break;
    case CmpKind::LessEq: atom_true = v <= Rational(0); break;
    case CmpKind::Eq:     atom_true = v == Rational(0); break;
    }
    return atom_true == positive_;
}

void Literal::collect_vars(std::set<FluentId>& out) const {
    if (is_prop())
        out.insert(fluent());
    else
        std::get<NumAtom>(atom_).expr.collect_vars(out);
}

std::set<FluentId> Literal::vars() const {
    std::set<FluentId> out;
    collect_vars(out);
    return out;
}

int Literal::compare_atoms(const Literal& o) const {
    if (is_prop() != o.is_prop())
        return is_prop() ? -1 : 1;
    if (is_prop()) {
        if (fluent() != o.fluent())
            return fluent() < o.fluent() ? -1 : 1;
        return 0;
    }
    const NumAtom& a = std::get<NumAtom>(atom_);
    const NumAtom& b = std::get<NumAtom>(o.atom_);
    if (a.cmp != b.cmp)
        return static_cast<int>(a.cmp) < static_cast<int>(b.cmp) ? -1 : 1;
    return a.expr.compare(b.expr);
}

int Literal::compare(const Literal& o) const {
    int c = compare_atoms(o);
    if (c != 0)
        return c;
    if (positive_ != o.positive_)
        return positive_ ? 1 : -1;
    return 0;
}

std::string Literal::to_string(
    const std::function<std::string(FluentId)>& fluent_name) const {
    if (is_prop())
        return (positive_ ? "" : "not ") + fluent_name(fluent());
    const NumAtom& a = std::get<NumAtom>(atom_);
    const char* op = nullptr;
    switch (a.cmp) {
    case CmpKind::Less:   op = positive_ ? "<" : ">=";  break;
    case CmpKind::LessEq: op = positive_ ? "<=" : ">";  break;
    case CmpKind::Eq:     op = positive_ ? "==" : "!="; break;
    }
    return a.expr.to_string(fluent_name) + " " + op + " 0";
}

}  // namespace scoper
