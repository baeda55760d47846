#include "hyperinc/rational.hpp"

#include <cctype>

#include "hyperinc/error.hpp"

namespace hyperinc {

std::string to_string(const Rational& q) {
    const BigInt& den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorCode::InvalidParameters, "not a rational: '" + std::string(whole) + "'");
    BigInt value = 0;
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorCode::InvalidParameters, "not a rational: '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), whole);
        const BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) throw Error(ErrorCode::InvalidParameters, "zero denominator in '" + std::string(whole) + "'");
        value = Rational(num, den);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto int_part = text.substr(0, dot);
        const auto frac_part = text.substr(dot + 1);
        if (int_part.empty() && frac_part.empty())
            throw Error(ErrorCode::InvalidParameters, "not a rational: '" + std::string(whole) + "'");
        const BigInt ip = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
        const BigInt fp = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, whole);
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        value = Rational(ip) + Rational(fp, scale);
    } else {
        value = Rational(parse_integer(text, whole));
    }
    return negative ? Rational(-value) : value;
}

}  // namespace hyperinc
