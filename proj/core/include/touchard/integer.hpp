#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace touchard {

// Exact arbitrary-precision arithmetic; no rounding anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Integer& v) { return v.str(); }

// Floored Euclidean residue: result is in [0, p) for any sign of v.
inline long mod_floor(const Integer& v, long p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return static_cast<long>(r);
}

}  // namespace touchard
