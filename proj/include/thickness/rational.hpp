#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace thickness {

// Exact arbitrary-precision arithmetic everywhere a decision is made.
// cpp_rational keeps values canonical (gcd 1, positive denominator),
// which is exactly the invariant the drawing file format relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& value) { return value.sign(); }
inline int sign(const BigInt& value) { return value.sign(); }

// Serialized as "p/q", with "/q" omitted for integers.
std::string format_rational(const Rat& value);

// Accepts "p", "p/q" and a plain decimal form like "-1.25"; anything else
// (or q == 0) is a parse error.
Rat parse_rational(const std::string& text);

} // namespace thickness
