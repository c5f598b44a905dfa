#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace dmb {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::optional<BigInt> parse_digits(std::string_view s)
{
    if (s.empty()) return std::nullopt;
    BigInt out = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
        out = out * 10 + (ch - '0');
    }
    return out;
}

}  // namespace detail

/// Parses `p`, `p/q` or a decimal literal such as `-1.25` into an exact rational.
inline std::optional<Rational> parse_rational(std::string_view text)
{
    if (text.empty()) return std::nullopt;
    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = detail::parse_digits(text.substr(0, slash));
        auto den = detail::parse_digits(text.substr(slash + 1));
        if (!num || !den || *den == 0) return std::nullopt;
        value = Rational(*num, *den);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole_part = text.substr(0, dot);
        auto frac_part = text.substr(dot + 1);
        if (whole_part.empty() && frac_part.empty()) return std::nullopt;
        BigInt whole = 0;
        if (!whole_part.empty()) {
            auto w = detail::parse_digits(whole_part);
            if (!w) return std::nullopt;
            whole = *w;
        }
        BigInt frac = 0;
        BigInt scale = 1;
        if (!frac_part.empty()) {
            auto f = detail::parse_digits(frac_part);
            if (!f) return std::nullopt;
            frac = *f;
            for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
        }
        value = Rational(whole * scale + frac, scale);
    } else {
        auto num = detail::parse_digits(text);
        if (!num) return std::nullopt;
        value = Rational(*num);
    }
    return negative ? Rational(-value) : value;
}

inline std::string to_string(const Rational& value)
{
    std::ostringstream os;
    os << value;
    return os.str();
}

inline std::string to_string(const BigInt& value)
{
    return value.str();
}

}  // namespace dmb
