#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace mindeg {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. The backend keeps the canonical form (positive
// denominator, gcd(|num|, den) = 1) after every arithmetic operation.
using Rational = boost::multiprecision::cpp_rational;

// Serializes as "p/q", or "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& x) { return x.str(); }

// Accepts the same grammar: optional sign, digits, optional "/digits" with a
// positive denominator.
inline Rational rational_from_string(const std::string& s) {
    const auto bad = [&] {
        throw std::invalid_argument("not a rational literal: '" + s + "'");
    };
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t num_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == num_begin) bad();
    Integer num(s.substr(0, pos));
    if (pos == s.size()) return Rational(num);
    if (s[pos] != '/') bad();
    std::size_t den_begin = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size() || pos == den_begin) bad();
    Integer den(s.substr(den_begin));
    if (den == 0) bad();
    return Rational(num, den);
}

}  // namespace mindeg
