#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfren {

// Exact rationals, always kept canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" with arbitrary-size decimal integers.
Rational parse_rational(std::string_view text);

// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational &q);

std::string numerator_string(const Rational &q);
std::string denominator_string(const Rational &q);

Rational factorial(unsigned n);

} // namespace hopfren
