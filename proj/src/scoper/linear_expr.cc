#include "scoper/linear_expr.h"

namespace scoper {

LinearExpr LinearExpr::variable(FluentId f, Rational coeff) {
    LinearExpr e;
    if (coeff != Rational(0))
        e.terms_[f] = std::move(coeff);
    return e;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
    constant_ += o.constant_;
    for (const auto& [f, c] : o.terms_) {
        Rational& mine = terms_[f];
        mine += c;
        if (mine == Rational(0))
            terms_.erase(f);
    }
    return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& o) {
    return *this += o.negated();
}

LinearExpr& LinearExpr::operator*=(const Rational& k) {
    if (k == Rational(0)) {
        constant_ = Rational(0);
        terms_.clear();
        return *this;
    }
    constant_ *= k;
    for (auto& [f, c] : terms_)
        c *= k;
    return *this;
}

LinearExpr LinearExpr::negated() const {
    LinearExpr e(*this);
    e *= Rational(-1);
    return e;
}

Rational LinearExpr::eval(const State& s) const {
    Rational result = constant_;
    for (const auto& [f, c] : terms_)
        result += c * s.at(f).as_numeric();
    return result;
}

void LinearExpr::collect_vars(std::set<FluentId>& out) const {
    for (const auto& [f, c] : terms_)
        out.insert(f);
}

int LinearExpr::compare(const LinearExpr& o) const {
    if (constant_ != o.constant_)
        return constant_ < o.constant_ ? -1 : 1;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first)
            return it->first < jt->first ? -1 : 1;
        if (it->second != jt->second)
            return it->second < jt->second ? -1 : 1;
    }
    if (it != terms_.end())
        return 1;
    if (jt != o.terms_.end())
        return -1;
    return 0;
}

std::string LinearExpr::to_string(
    const std::function<std::string(FluentId)>& fluent_name) const {
    std::string out;
    for (const auto& [f, c] : terms_) {
        if (!out.empty())
            out += " + ";
        if (c != Rational(1))
            out += scoper::to_string(c) + "*";
        out += fluent_name(f);
    }
    if (constant_ != Rational(0) || out.empty()) {
        if (!out.empty())
            out += " + ";
        out += scoper::to_string(constant_);
    }
    return out;
}

}  // namespace scoper
