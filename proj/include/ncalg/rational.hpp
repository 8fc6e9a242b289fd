#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncalg {

// Exact arithmetic everywhere: coefficients are rationals, dimension counts
// are arbitrary-precision integers. No floating point leaks into any series
// value; doubles appear only in growth diagnostics, which are computed from
// logarithms of BigInt values.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// Natural log of a positive BigInt, accurate even far beyond double range.
double log_value(const BigInt& n);

}  // namespace ncalg
