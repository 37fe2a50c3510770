#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bonnet::linalg {

// mpq_class keeps itself canonical: denominator > 0, gcd = 1.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

}  // namespace bonnet::linalg
