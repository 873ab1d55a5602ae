#pragma once

#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace artin {

// Sparse Laurent polynomial in a single variable over Q. Canonical form:
// no zero coefficients stored. The variable tag travels with the value;
// pure constants mix with anything.
class UnivariatePoly {
 public:
  UnivariatePoly() : var_('q') {}
  explicit UnivariatePoly(char var) : var_(var) {}
  UnivariatePoly(char var, const Rational& c) : var_(var) {
    if (c != 0) coeffs_[0] = c;
  }
  static UnivariatePoly monomial(char var, const Rational& c, int exp);

  char var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  const std::map<int, Rational>& terms() const { return coeffs_; }
  Rational coeff(int e) const;
  int min_exp() const;  // nonzero poly only
  int max_exp() const;
  int degree() const { return max_exp(); }

  void add_term(int exp, const Rational& c);

  UnivariatePoly operator-() const;
  UnivariatePoly operator+(const UnivariatePoly& o) const;
  UnivariatePoly operator-(const UnivariatePoly& o) const;
  UnivariatePoly operator*(const UnivariatePoly& o) const;
  UnivariatePoly& operator+=(const UnivariatePoly& o) { return *this = *this + o; }
  UnivariatePoly& operator*=(const UnivariatePoly& o) { return *this = *this * o; }
  bool operator==(const UnivariatePoly& o) const { return coeffs_ == o.coeffs_; }

  UnivariatePoly scaled(const Rational& c) const;

  // Exact division; throws if the remainder is nonzero (any inexactness is a
  // formula-transcription bug, so it fails loudly).
  UnivariatePoly divide_exact(const UnivariatePoly& d) const;

  // Substitution. x must be nonzero when negative exponents are present.
  Rational eval(const Rational& x) const;

  UnivariatePoly pow(unsigned k) const;

  // Divide by the unit c*x^a so the lowest term becomes 1*x^0.
  UnivariatePoly unit_normalized() const;

  std::string str() const;
  static UnivariatePoly parse(const std::string& text, char var);

 private:
  char var_;
  std::map<int, Rational> coeffs_;
};

// Sparse Laurent polynomial in q and t over Q. Exponent pairs (qe, te).
class BivariatePoly {
 public:
  using Key = std::pair<int, int>;

  BivariatePoly() = default;
  explicit BivariatePoly(const Rational& c) {
    if (c != 0) coeffs_[{0, 0}] = c;
  }
  static BivariatePoly monomial(const Rational& c, int qe, int te);
  static BivariatePoly from_univariate(const UnivariatePoly& p);  // var q or t

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_t_free() const;
  bool is_q_free() const;
  const std::map<Key, Rational>& terms() const { return coeffs_; }
  Rational coeff(int qe, int te) const;

  void add_term(int qe, int te, const Rational& c);

  BivariatePoly operator-() const;
  BivariatePoly operator+(const BivariatePoly& o) const;
  BivariatePoly operator-(const BivariatePoly& o) const;
  BivariatePoly operator*(const BivariatePoly& o) const;
  BivariatePoly& operator+=(const BivariatePoly& o) { return *this = *this + o; }
  BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }
  bool operator==(const BivariatePoly& o) const { return coeffs_ == o.coeffs_; }

  BivariatePoly scaled(const Rational& c) const;
  BivariatePoly divide_exact(const BivariatePoly& d) const;

  // Partial or full substitution; specialized values must be nonzero
  // (units have to stay units).
  UnivariatePoly specialize_q(const Rational& q0) const;  // result in t
  UnivariatePoly specialize_t(const Rational& t0) const;  // result in q
  Rational eval(const Rational& q0, const Rational& t0) const;

  UnivariatePoly as_univariate(char var) const;  // requires the other var absent

  BivariatePoly pow(unsigned k) const;
  BivariatePoly unit_normalized() const;

  std::string str() const;
  static BivariatePoly parse(const std::string& text);

 private:
  std::map<Key, Rational> coeffs_;
};

}  // namespace artin
