#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <functional>
#include <string>

namespace scoper {

// Exact rational arithmetic for numeric fluent values, action costs and
// linear expressions. Evaluation results must be reproducible bit for bit,
// so floating point is not used anywhere in the model.
using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

double to_double(const Rational& r);

// Accepts integers ("7", "-3"), fractions ("2/3") and decimal literals
// ("0.25", "-1.5"). Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace scoper

template <>
struct std::hash<scoper::Rational> {
    std::size_t operator()(const scoper::Rational& r) const noexcept {
        std::size_t h = std::hash<long long>{}(r.numerator());
        return h * 1000003u + std::hash<long long>{}(r.denominator());
    }
};
