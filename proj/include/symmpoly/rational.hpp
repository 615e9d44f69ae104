#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symmpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/* Renders "n" when the denominator is 1, otherwise "n/d". */
inline std::string rational_to_string(const Rational& q)
{
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

} // namespace symmpoly
