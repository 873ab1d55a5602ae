#include "qanalog.hpp"

namespace artin {

UnivariatePoly q_analog(int m) {
  if (m < 0) fail("q_analog requires m >= 0");
  UnivariatePoly p('q');
  for (int i = 0; i < m; ++i) p.add_term(i, Rational(1));
  return p;
}

UnivariatePoly q_factorial(int m) {
  if (m < 0) fail("q_factorial requires m >= 0");
  UnivariatePoly p('q', Rational(1));
  for (int i = 1; i <= m; ++i) p *= q_analog(i);
  return p;
}

UnivariatePoly q_binomial(int m, int i) {
  if (i < 0 || i > m) fail("q_binomial index out of range");
  return q_factorial(m).divide_exact(q_factorial(i) * q_factorial(m - i));
}

namespace {
BivariatePoly one_plus_tq(int i) {
  BivariatePoly p(Rational(1));
  p.add_term(i, 1, Rational(1));
  return p;
}
}  // namespace

BivariatePoly qt_double_factorial(int m) {
  if (m < 0) fail("qt_double_factorial requires m >= 0");
  BivariatePoly p = BivariatePoly::from_univariate(q_factorial(m));
  for (int i = 0; i < m; ++i) p *= one_plus_tq(i);
  return p;
}

BivariatePoly qt_primed_binomial(int m, int i) {
  if (i < 0 || i > m) fail("qt_primed_binomial index out of range");
  BivariatePoly product = BivariatePoly::from_univariate(q_binomial(m, i));
  for (int j = i; j < m; ++j) product *= one_plus_tq(j);
  BivariatePoly quotient = qt_double_factorial(m).divide_exact(
      qt_double_factorial(i) * BivariatePoly::from_univariate(q_factorial(m - i)));
  if (!(product == quotient)) fail("qt_primed_binomial: defining expressions disagree");
  return product;
}

}  // namespace artin
