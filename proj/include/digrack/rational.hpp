#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace digrack {

// Exact arbitrary-precision rationals; no floating point anywhere in the
// invariant computations.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical form: "n" when the denominator is 1, otherwise "n/d" reduced
// with positive denominator.
std::string rational_to_string(const Rational& r);

// Accepts "n" or "n/d"; throws ValidationError("InvalidRational", ...) on
// anything else (including a zero denominator).
Rational rational_from_string(const std::string& text);

}  // namespace digrack
