#include "rational.hpp"

#include <stdexcept>

namespace artin {

Rational make_rational(long num, long den) {
  if (den == 0) fail("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) fail("bad rational literal: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace artin
