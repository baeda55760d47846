#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace hyperinc {

using BigInt = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q" and finite decimals such as "-1.25". Throws
/// Error{InvalidParameters} on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

}  // namespace hyperinc
