#include "scoper/rational.h"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace scoper {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

namespace {

long long parse_digits(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw std::invalid_argument("malformed rational: '" + text + "'");
    return std::strtoll(text.substr(start, pos - start).c_str(), nullptr, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    long long integer = parse_digits(text, pos);
    Rational result(integer);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        long long denom = parse_digits(text, pos);
        if (denom == 0)
            throw std::invalid_argument("zero denominator: '" + text + "'");
        result = Rational(integer, denom);
    } else if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        long long frac = parse_digits(text, pos);
        long long scale = 1;
        for (std::size_t i = start; i < pos; ++i)
            scale *= 10;
        result = Rational(integer) + Rational(frac, scale);
    }
    if (pos != text.size())
        throw std::invalid_argument("malformed rational: '" + text + "'");
    return negative ? -result : result;
}

}  // namespace scoper
