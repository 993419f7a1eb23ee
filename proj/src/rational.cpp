#include "tunnelgr/rational.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

namespace tunnelgr {

std::string to_fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_decimal_string(const Rational& r, int significant_digits) {
  std::ostringstream out;
  out << std::setprecision(significant_digits) << to_double(r);
  return out.str();
}

std::optional<Rational> parse_fraction(std::string_view text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  long long num = 0;
  auto res = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
  if (res.ec != std::errc{} || res.ptr != num_part.data() + num_part.size()) return std::nullopt;
  long long den = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den_part = text.substr(slash + 1);
    if (den_part.empty()) return std::nullopt;
    res = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
    if (res.ec != std::errc{} || res.ptr != den_part.data() + den_part.size()) return std::nullopt;
  }
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace tunnelgr
