#pragma once

#include "scoper/fluent.h"
#include "scoper/state.h"

#include <functional>
#include <map>
#include <set>
#include <string>

namespace scoper {

// Rational-affine expression over numeric fluents:
//   constant + sum of coefficient * fluent.
// Terms with zero coefficient are dropped, so equal expressions compare equal.
class LinearExpr {
public:
    LinearExpr() = default;
    explicit LinearExpr(Rational constant) : constant_(std::move(constant)) {}
    explicit LinearExpr(long long constant) : constant_(constant) {}

    static LinearExpr variable(FluentId f, Rational coeff = Rational(1));

    const Rational& constant() const { return constant_; }
    const std::map<FluentId, Rational>& terms() const { return terms_; }
    bool is_constant() const { return terms_.empty(); }

    LinearExpr& operator+=(const LinearExpr& o);
    LinearExpr& operator-=(const LinearExpr& o);
    LinearExpr& operator*=(const Rational& k);

    friend LinearExpr operator+(LinearExpr a, const LinearExpr& b) {
        a += b;
        return a;
    }
    friend LinearExpr operator-(LinearExpr a, const LinearExpr& b) {
        a -= b;
        return a;
    }
    friend LinearExpr operator*(LinearExpr a, const Rational& k) {
        a *= k;
        return a;
    }

    LinearExpr negated() const;

    Rational eval(const State& s) const;
    void collect_vars(std::set<FluentId>& out) const;

    int compare(const LinearExpr& o) const;
    bool operator==(const LinearExpr& o) const { return compare(o) == 0; }
    bool operator<(const LinearExpr& o) const { return compare(o) < 0; }

    std::string to_string(
        const std::function<std::string(FluentId)>& fluent_name) const;

private:
    Rational constant_{0};
    std::map<FluentId, Rational> terms_;
};

}  // namespace scoper
