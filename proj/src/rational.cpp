#include "algkit/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>

namespace algkit {

std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t pos = 0;
  if (pos < s.size() && s[pos] == '-') ++pos;
  if (pos >= s.size()) return false;
  if (s[pos] == '0') return pos + 1 == s.size() && s[0] != '-';  // "0" only, no "-0"
  for (; pos < s.size(); ++pos)
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
  return true;
}

bool valid_denominator_token(const std::string& s) {
  if (s.empty() || s[0] == '0') return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

bool looks_like_rational_literal(const std::string& text) {
  if (text.empty()) return false;
  for (char ch : text)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/')) return false;
  return true;
}

Rational parse_rational_literal(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part))
    throw structural_error("scalar '" + text + "' is not a canonical rational");
  Integer num(num_part);
  Integer den(1);
  if (slash != std::string::npos) {
    const std::string den_part = text.substr(slash + 1);
    if (!valid_denominator_token(den_part))
      throw structural_error("scalar '" + text + "' has an invalid denominator");
    den = Integer(den_part);
    if (den == 1)
      throw structural_error("scalar '" + text + "' must be written without the unit denominator");
    if (num == 0)
      throw structural_error("scalar '" + text + "' must be written as 0");
    if (gcd(abs(num), den) != 1)
      throw structural_error("scalar '" + text + "' is not in lowest terms");
  }
  return Rational(num, den);
}

}  // namespace algkit
