#pragma once

#include <map>
#include <string>
#include <vector>

#include "poly.hpp"

namespace artin {

int euler_phi(int m);

// The m-th cyclotomic polynomial in q: monic, integer coefficients,
// prod_{d|m} cyclotomic(d) = q^m - 1. Cached; m >= 1.
const UnivariatePoly& cyclotomic(int m);

// Element of K_m = Q[q]/(Phi_m(q)), stored as coordinates in the power basis
// 1, zeta, ..., zeta^{phi(m)-1}. Every nonzero element is invertible.
class Cyclo {
 public:
  Cyclo() : m_(1), v_(1, Rational(0)) {}
  explicit Cyclo(int m);
  Cyclo(int m, const Rational& c);
  static Cyclo zeta(int m) { return zeta_pow(m, 1); }
  static Cyclo zeta_pow(int m, long e);  // zeta^e, any sign (zeta^m = 1)
  static Cyclo from_qpoly(int m, const UnivariatePoly& p);

  int index() const { return m_; }
  const std::vector<Rational>& coords() const { return v_; }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;

  bool operator==(const Cyclo& o) const;
  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  // Extended Euclid against Phi_m; division-by-zero error on 0.
  Cyclo inverse() const;
  Cyclo operator/(const Cyclo& o) const { return *this * o.inverse(); }

  std::string str() const;  // polynomial in the symbol z

 private:
  int m_;
  std::vector<Rational> v_;

  friend class CycloTable;
};

struct KTDivMod;

// Laurent polynomial in one variable (t by default) with coefficients in K_m.
// One variable over a field: the PID where Smith normal form happens.
class KTPoly {
 public:
  KTPoly() : m_(1), var_('t') {}
  explicit KTPoly(int m, char var = 't') : m_(m), var_(var) {}
  KTPoly(int m, char var, const Cyclo& c);
  static KTPoly monomial(int m, char var, const Cyclo& c, int exp);
  static KTPoly from_rational_poly(int m, const UnivariatePoly& p);

  int index() const { return m_; }
  char var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_unit() const;  // nonzero monomial
  const std::map<int, Cyclo>& terms() const { return coeffs_; }
  Cyclo coeff(int e) const;
  int min_exp() const;
  int max_exp() const;
  int degree_span() const { return is_zero() ? -1 : max_exp() - min_exp(); }

  void add_term(int exp, const Cyclo& c);

  bool operator==(const KTPoly& o) const;
  KTPoly operator-() const;
  KTPoly operator+(const KTPoly& o) const;
  KTPoly operator-(const KTPoly& o) const;
  KTPoly operator*(const KTPoly& o) const;
  KTPoly& operator+=(const KTPoly& o) { return *this = *this + o; }

  KTPoly scaled(const Cyclo& c) const;
  KTPoly shifted(int k) const;  // * var^k

  // Euclidean division for ordinary-polynomial operands (min_exp >= 0).
  KTDivMod divmod(const KTPoly& d) const;

  // nullopt-style exact division: returns false if remainder is nonzero.
  bool try_divide_exact(const KTPoly& d, KTPoly& out) const;

  // Divide by the unit c*var^k so the lowest term becomes 1*var^0.
  KTPoly unit_normalized() const;

  std::string str() const;

 private:
  int m_;
  char var_;
  std::map<int, Cyclo> coeffs_;
};

struct KTDivMod {
  KTPoly quot, rem;
};

// Substitute q -> zeta (negative exponents fold via zeta^m = 1); a ring
// homomorphism R -> K_m[t^{+-}].
KTPoly reduce_mod_cyclotomic(const BivariatePoly& p, int m);

}  // namespace artin
