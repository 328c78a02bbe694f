#pragma once

#include "scoper/errors.h"
#include "scoper/fluent.h"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace scoper {

// Total assignment of values, indexed by FluentId. Construction is by value;
// states are treated as immutable snapshots once handed out.
class State {
public:
    State() = default;
    explicit State(std::vector<Value> values) : values_(std::move(values)) {}

    const Value& at(FluentId f) const {
        if (f < 0 || static_cast<std::size_t>(f) >= values_.size())
            throw UndeclaredFluentError("fluent id " + std::to_string(f) +
                                        " has no value in this state");
        return values_[static_cast<std::size_t>(f)];
    }

    const Value& operator[](FluentId f) const { return at(f); }

    void set(FluentId f, Value v) {
        at(f);  // range check
        values_[static_cast<std::size_t>(f)] = std::move(v);
    }

    std::size_t size() const { return values_.size(); }
    const std::vector<Value>& values() const { return values_; }

    bool operator==(const State&) const = default;

private:
    std::vector<Value> values_;
};

}  // namespace scoper

template <>
struct std::hash<scoper::State> {
    std::size_t operator()(const scoper::State& s) const noexcept {
        std::size_t h = 0;
        for (const scoper::Value& v : s.values())
            h = h * 131 + std::hash<scoper::Value>{}(v);
        return h;
    }
};
