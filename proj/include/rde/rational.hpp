#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace rde {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal literal ("1", "-0.25", "1.5e-3") into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(std::string_view text);

/// Renders a rational whose reduced denominator is of the form 2^a 5^b as a
/// canonical decimal string (no trailing fractional zeros, no exponent).
/// Throws std::domain_error if the value has no finite decimal expansion.
std::string decimal_from_rational(const Rational& value);

/// True iff the reduced denominator is a product of 2s and 5s.
bool has_finite_decimal(const Rational& value);

double to_double(const Rational& value);

/// Upper bound on the number of decimal digits of numerator plus denominator.
std::size_t decimal_digit_bound(const Rational& value);

/// "num/den" (or just "num" for integers), always reduced.
std::string fraction_string(const Rational& value);

}  // namespace rde
