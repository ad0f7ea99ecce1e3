#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wheel {

/// Arbitrary-precision signed integer. Sign-magnitude, zero is canonical.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den < 0) return Rational(BigInt(-num), BigInt(-den));
    return Rational(num, den);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const BigInt& z) { return z.str(); }

/// Parses "p", "-p" or "p/q" with q > 0.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    const auto digits = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!digits(num_text, true)) throw bad();
    BigInt num{std::string(num_text)};
    if (slash == std::string_view::npos) return Rational(num);
    const auto den_text = text.substr(slash + 1);
    if (!digits(den_text, false)) throw bad();
    BigInt den{std::string(den_text)};
    if (den == 0) throw bad();
    return Rational(num, den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Decimal rendering with 12 significant digits.
inline std::string approx_string(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(q));
    return buf;
}

/// The double nearest to the 12-significant-digit rendering.
inline double approx_value(const Rational& q) { return std::stod(approx_string(q)); }

}  // namespace wheel
