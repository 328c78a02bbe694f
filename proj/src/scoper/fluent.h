#pragma once

#include "scoper/rational.h"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace scoper {

using FluentId = int;
using ActionId = int;

enum class FluentKind { Propositional, Numeric };

// Inclusive integer range a bounded numeric fluent may take.
struct DomainBound {
    long long lo = 0;
    long long hi = 0;

    long long size() const { return hi - lo + 1; }
    bool operator==(const DomainBound&) const = default;
};

struct Fluent {
    std::string name;
    FluentKind kind = FluentKind::Propositional;
    std::optional<DomainBound> bound;  // numeric fluents only; absent = unbounded
};

// Value of one fluent: a truth value for propositional fluents, an exact
// rational for numeric ones.
class Value {
public:
    static Value boolean(bool b) { return Value(b); }
    static Value numeric(Rational r) { return Value(std::move(r)); }
    static Value numeric(long long n) { return Value(Rational(n)); }

    bool is_boolean() const { return std::holds_alternative<bool>(v_); }
    bool as_boolean() const { return std::get<bool>(v_); }
    const Rational& as_numeric() const { return std::get<Rational>(v_); }

    bool matches(FluentKind kind) const {
        return is_boolean() == (kind == FluentKind::Propositional);
    }

    bool operator==(const Value&) const = default;

    int compare(const Value& other) const {
        if (v_.index() != other.v_.index())
            return v_.index() < other.v_.index() ? -1 : 1;
        if (is_boolean()) {
            if (as_boolean() == other.as_boolean())
                return 0;
            return as_boolean() ? 1 : -1;
        }
        if (as_numeric() == other.as_numeric())
            return 0;
        return as_numeric() < other.as_numeric() ? -1 : 1;
    }

    std::string to_string() const {
        if (is_boolean())
            return as_boolean() ? "true" : "false";
        return scoper::to_string(as_numeric());
    }

private:
    explicit Value(bool b) : v_(b) {}
    explicit Value(Rational r) : v_(std::move(r)) {}

    std::variant<bool, Rational> v_;
};

}  // namespace scoper

template <>
struct std::hash<scoper::Value> {
    std::size_t operator()(const scoper::Value& v) const noexcept {
        if (v.is_boolean())
            return v.as_boolean() ? 0x9e3779b9u : 0x7f4a7c15u;
        return std::hash<scoper::Rational>{}(v.as_numeric());
    }
};
