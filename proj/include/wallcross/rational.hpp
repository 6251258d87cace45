#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "wallcross/errors.hpp"

namespace wallcross {

/// Exact rational number, always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

using RationalVector = std::vector<Rational>;

inline bool is_integer(const Rational& x) { return x.denominator() == 1; }

/// Largest integer not exceeding x.
inline std::int64_t floor(const Rational& x)
{
    std::int64_t q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0)
        --q;
    return q;
}

inline int sign(const Rational& x) { return (x.numerator() > 0) - (x.numerator() < 0); }

inline Rational abs(const Rational& x) { return sign(x) < 0 ? -x : x; }

/// Representative of x modulo period in the half-open interval [0, period).
inline Rational reduce_mod(const Rational& x, const Rational& period)
{
    if (sign(period) <= 0)
        throw std::invalid_argument("reduce_mod: period must be positive");
    return x - period * Rational(floor(x / period));
}

inline std::string to_string(const Rational& x)
{
    if (x.denominator() == 1)
        return std::to_string(x.numerator());
    return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace detail {

inline std::int64_t parse_int(std::string_view text)
{
    if (text.empty())
        throw ParseError("empty integer");
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size())
        throw ParseError("malformed integer '" + std::string(text) + "'");
    std::int64_t value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw ParseError("malformed integer '" + std::string(text) + "'");
        if (value > (INT64_MAX - (c - '0')) / 10)
            throw ParseError("integer out of range '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? -value : value;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(std::string_view text)
{
    text = detail::trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(detail::parse_int(text));
    auto num = detail::parse_int(text.substr(0, slash));
    auto den = detail::parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Parses a comma-separated list such as "0,-1/2,3".
inline RationalVector parse_rational_list(std::string_view text)
{
    RationalVector out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_rational(item));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline RationalVector to_rationals(const std::vector<int>& v)
{
    return RationalVector(v.begin(), v.end());
}

} // namespace wallcross
