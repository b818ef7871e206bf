#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace urysohn {

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator. Expression templates are disabled so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p/q", "p" or "-p/q". Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" for integers.
std::string to_string(const Rational& value);

/// Comma separated rationals, e.g. "2/5,1/2".
std::vector<Rational> parse_rational_list(std::string_view csv);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

/// |value|
Rational abs(const Rational& value);

}  // namespace urysohn
