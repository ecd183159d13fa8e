#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace algrest {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders "3", "-1/2", "0".
inline std::string rat_to_string(const Rat &q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

}  // namespace algrest
