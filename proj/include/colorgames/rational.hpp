#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace colorgames {

// Exact arithmetic throughout. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on anything else,
// including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace colorgames
