#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poly.hpp"

namespace artin {
namespace gb {

// Variable universe for the ideal machinery: q, t, the Laurent saturation
// variable z (relation z*q*t - 1) and the intersection tag w.
enum Var : int { Q = 0, T = 1, Z = 2, W = 3 };
constexpr int kVars = 4;

using Mon = std::array<uint16_t, kVars>;

int total_degree(const Mon& a);
bool divides(const Mon& a, const Mon& b);  // a | b
Mon mon_mul(const Mon& a, const Mon& b);
Mon mon_div(const Mon& a, const Mon& b);  // requires b | a
Mon mon_lcm(const Mon& a, const Mon& b);

// degrevlex with q > t > z > w; the elimination orders compare the
// eliminated variable first (block order), then degrevlex on the rest.
enum class MonOrder { Degrevlex, ElimW, ElimZ };

struct MonCmp {
  MonOrder order = MonOrder::Degrevlex;
  bool operator()(const Mon& a, const Mon& b) const;  // strict less
};

class MPoly {
 public:
  using Terms = std::map<Mon, Rational, MonCmp>;

  explicit MPoly(MonOrder order = MonOrder::Degrevlex) : terms_(MonCmp{order}) {}
  static MPoly constant(const Rational& c, MonOrder order = MonOrder::Degrevlex);
  static MPoly monomial(const Mon& m, const Rational& c, MonOrder order);
  static MPoly from_bivariate(const BivariatePoly& p, MonOrder order);
  BivariatePoly to_bivariate() const;  // requires z- and w-free

  MonOrder order() const { return terms_.key_comp().order; }
  MPoly with_order(MonOrder order) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Terms& terms() const { return terms_; }
  const Mon& leading_monomial() const;
  const Rational& leading_coeff() const;

  void add_term(const Mon& m, const Rational& c);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const;
  MPoly mul_term(const Mon& m, const Rational& c) const;
  MPoly monic() const;

  std::string str() const;

 private:
  Terms terms_;
};

// Reduced Groebner basis; all S-polynomials reduce to zero (re-checked by
// groebner_selfcheck).  Output is interreduced, monic, sorted by leading
// monomial.
std::vector<MPoly> buchberger(std::vector<MPoly> gens);

MPoly normal_form(MPoly f, const std::vector<MPoly>& basis);
bool reduces_to_zero(const MPoly& f, const std::vector<MPoly>& basis);
bool groebner_selfcheck(const std::vector<MPoly>& basis);

}  // namespace gb

// ----- ideals of the Laurent ring R = Q[q^+-, t^+-] -----------------------
//
// A Laurent ideal is carried as a finite list of (ordinary) generators in
// Q[q, t]; all computations saturate with z*q*t - 1, which inverts q and t.

struct LaurentIdeal {
  std::vector<BivariatePoly> gens;
};

// Saturated Groebner basis in Q[q,t,z] (cached per call site, not global).
std::vector<gb::MPoly> saturated_basis(const LaurentIdeal& ideal);

bool ideal_member(const BivariatePoly& f, const std::vector<gb::MPoly>& sat_basis);
bool is_unit_ideal(const LaurentIdeal& ideal);

// Contraction to Q[q,t] (eliminate z from the saturated ideal).
std::vector<BivariatePoly> contract_to_qt(const LaurentIdeal& ideal);

// Intersection of two ideals of Q[q,t] via the w-trick.
std::vector<BivariatePoly> intersect_qt(const std::vector<BivariatePoly>& a,
                                        const std::vector<BivariatePoly>& b);

// (I : f) in the Laurent ring, computed as (I^c cap (f)) / f over Q[q,t].
std::vector<BivariatePoly> colon_ideal(const LaurentIdeal& ideal, const BivariatePoly& f);

// Product of ideals: pairwise generator products, then an intermediate
// reduced basis to keep generator counts bounded.
LaurentIdeal ideal_product(const LaurentIdeal& a, const LaurentIdeal& b);

// ----- the paper's ideal lemmas --------------------------------------------

// I(n,k): generated by the primed binomials [n choose n-d]'_{q,t}, d | n, d <= k.
LaurentIdeal ideal_I(int n, int k);

struct LemmaReport {
  bool pass = false;
  std::string detail;
};

// alpha_{n,k}: R/(Phi_k) -> R/I(n,k-1) by multiplication with the primed
// binomial: well-definedness and injectivity, decided by basis computations
// in the saturated ring.  Requires k | n, k >= 2.
LemmaReport verify_lemma_ideali2(int n, int k);

// I(n) equals the product of (Phi_d, q^i t + 1) for d | n, 0 <= i <= d-2,
// and (q^{n-1} t + 1); all factors pairwise coprime.
LemmaReport verify_lemma_ideali1(int n);

}  // namespace artin
