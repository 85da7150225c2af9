#pragma once
// Arbitrary-precision integers and exact rationals.
//
// Count is the universal counting type: independent-set counts reach 2^n for
// n in the hundreds, and the combination-plan arithmetic manipulates integers
// of size 2^((D+1)^2).  Everything stays exact; no floating point appears in
// any counting or certification path.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <string>

#include "fibspec/errors.hpp"

namespace fibspec {

using Count = boost::multiprecision::cpp_int;

// Exact rational with normalized sign and gcd-reduced representation.
using Rational = boost::rational<Count>;

// 2^k for k well beyond 64 bits' worth of shift.
Count pow2(unsigned long long k);

// 3^k, used by the matching bound 3^nu * 2^(n-2nu).
Count pow3(unsigned long long k);

// base^exp by repeated squaring.
Count powi(const Count& base, unsigned long long exp);

// Lossless decimal round-trips for JSON interop.
std::string to_decimal(const Count& x);
Count parse_decimal(const std::string& s);  // throws validation_error

// ceil(num/den) and floor(num/den) for den > 0.
Count ceil_div(const Count& num, const Count& den);
Count floor_div(const Count& num, const Count& den);

// Accepts "a/b", plain integers, and decimal literals like "0.001" (which
// parses to 1/1000 exactly).  Throws validation_error on anything else or on
// a zero denominator.
Rational parse_rational(const std::string& s);
std::string rational_to_string(const Rational& r);

// ceil(r * x) and floor(r * x) for a nonnegative rational r and integer x.
Count ceil_scale(const Rational& r, const Count& x);
Count floor_scale(const Rational& r, const Count& x);

}  // namespace fibspec
