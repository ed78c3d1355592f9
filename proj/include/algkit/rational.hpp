// algkit — exact rational scalars (the ground field).
//
// Every scalar in the toolkit is an arbitrary-precision rational kept in
// lowest terms with a positive denominator. No floating point anywhere.

#ifndef ALGKIT_RATIONAL_HPP
#define ALGKIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace algkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised for malformed inputs: bad documents, mismatched shapes,
// unsupported kinds. Distinct from a mathematical "fails" verdict.
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "p" for integers, "p/q" otherwise; q > 0 and gcd(|p|, q) = 1 are
// guaranteed by the representation.
std::string format_rational(const Rational& r);

// Strict parser for canonical literals. Accepts "0", "-17", "3/4", …
// Rejects anything not in lowest terms ("2/4"), explicit unit
// denominators ("3/1"), "-0", leading zeros, and empty strings.
Rational parse_rational_literal(const std::string& text);

// True when `text` matches the literal grammar at all (canonical or not);
// such strings are never treated as parameter expressions.
bool looks_like_rational_literal(const std::string& text);

}  // namespace algkit

#endif
