#pragma once

#include "hnflag/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hnflag {

using Integer = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(Integer num, Integer den = 1) {
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Canonical text form: "p/q" in lowest terms with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& value) {
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace detail

/// Parses "[+-]digits" or "[+-]digits/digits". Throws ParseError on anything else,
/// including a zero denominator.
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!detail::all_digits(num_text) || !detail::all_digits(den_text)) {
        throw Error(ErrorKind::ParseError, "not a rational: \"" + std::string(text) + "\"");
    }
    BigInt num{std::string(num_text)};
    BigInt den{std::string(den_text)};
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    if (negative) num = -num;
    return Rational(num, den);
}

inline Rational min_of(std::span<const Rational> values) {
    if (values.empty()) throw Error(ErrorKind::EmptyInput, "minimum of an empty list");
    return *std::min_element(values.begin(), values.end());
}

inline std::vector<std::string> to_strings(std::span<const Rational> values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

} // namespace hnflag
