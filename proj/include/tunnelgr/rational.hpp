#ifndef TUNNELGR_RATIONAL_HPP
#define TUNNELGR_RATIONAL_HPP

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace tunnelgr {

// All rate-valued quantities are exact rationals end to end; doubles appear
// only in display formatting.
using Rational = boost::rational<long long>;

// "p/q" in lowest terms; plain "p" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

// Decimal approximation carrying the requested number of significant digits.
std::string to_decimal_string(const Rational& r, int significant_digits = 15);

// Accepts "p" and "p/q" (optional leading '-'). Returns nullopt on malformed
// input or a zero denominator.
std::optional<Rational> parse_fraction(std::string_view text);

double to_double(const Rational& r);

}  // namespace tunnelgr

#endif
