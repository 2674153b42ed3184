#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperoct {

// Always in lowest terms with a positive denominator, so == is structural.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

// Serialized form is always "num/den", also for integers ("3/1").
std::string format_rational(const Rational& q);

// Compact form for human output: "3", "-1/2".
std::string pretty_rational(const Rational& q);

}  // namespace hyperoct
