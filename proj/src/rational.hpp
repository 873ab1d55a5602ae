#pragma once

#include <gmpxx.h>
#include <string>

namespace artin {

// Exact rationals, always canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

// Throws std::invalid_argument; used for all precondition failures in the core.
[[noreturn]] void fail(const std::string& msg);

}  // namespace artin
