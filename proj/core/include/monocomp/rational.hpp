#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace monocomp {

// All weight / LP arithmetic in this library is exact.  Rational is an
// arbitrary-precision fraction kept in canonical form (denominator > 0,
// gcd(|num|, den) = 1), so equalities like nu* = tau* are checked as
// identities, never up to a tolerance.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Int(num), Int(den));
}

// Canonical machine format: "num/den" with the denominator always present,
// e.g. "3/2", "-1/3", "6/1".
std::string rational_to_string(const Rational& x);

// Accepts "num/den" or a bare integer "num".
Rational rational_from_string(const std::string& s);

} // namespace monocomp
