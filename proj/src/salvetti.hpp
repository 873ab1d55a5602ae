#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "poly.hpp"

namespace artin {

// Subset of I_n = {1..n} as a bitstring; bit i-1 set iff i is in Gamma.
struct GammaString {
  int n = 0;
  uint32_t bits = 0;

  int degree() const { return __builtin_popcount(bits); }
  bool contains(int i) const { return bits & (1u << (i - 1)); }
  std::string str() const;  // "b_1 b_2 ... b_n" as 0s and 1s
  bool operator==(const GammaString& o) const { return n == o.n && bits == o.bits; }
};

// The free cochain complex over R = Q[q^+-, t^+-]: one generator per subset
// Gamma of the Dynkin nodes, graded by |Gamma|.  d[k] maps degree k to k+1;
// rows are indexed by the degree k+1 basis, columns by the degree k basis.
struct CochainComplexR {
  Family family = Family::B;
  int n = 0;
  std::vector<std::vector<GammaString>> bases;                 // per degree
  std::vector<std::vector<std::vector<BivariatePoly>>> d;      // d[0..n-1]

  int basis_index(int degree, uint32_t bits) const;
  bool d_squared_is_zero() const;
};

// (-1)^{sigma(j,Gamma)} W_{Gamma+j}/W_Gamma with the closed forms: the primed
// (q,t)-binomial when the component of j reaches node n in family B, the
// plain q-binomial otherwise.  Asserted equal to the Poincare-polynomial
// ratio on every distinct shape.  j must not lie in Gamma.
BivariatePoly coboundary_coefficient(int n, uint32_t gamma, int j, Family family);

// 0 <= n <= 12; d.d = 0 is verified at construction, and family A entries
// are checked t-free.
CochainComplexR build_complex(Family family, int n);

// Quotient F^s/F^{s+1} on the strings ending in exactly s ones, compared
// entry-by-entry against build_complex(A, n-s-1) shifted by s under the
// basis bijection Gamma' -> Gamma'.0.1^s.
struct FiltrationReport {
  CochainComplexR quotient;
  bool matches_shifted_type_a = false;
  std::string detail;  // first mismatch, empty when clean
};
FiltrationReport filtration_quotient(int n, int s);

// Generator chains w_h, z_h, b_h, c_h, z_h(i), v_h(i); strings concatenate.
enum class DpsKind { w, z, b, c, zi, vi };

struct Chain {
  int length = 0;
  std::map<uint64_t, Rational> terms;  // bitmask (bit p-1 <-> position p) -> coeff

  int degree() const;  // common popcount; fails if mixed
};

Chain dps_generator(DpsKind kind, int h, int i = 0);

// Places the generator strings of the E_1 positions for torsion index m >= 2
// into the quotient complexes F^s/F^{s+1} of C_n and records whether each is
// a cocycle after reduction mod Phi_m.  Recorded, not asserted: a failure
// flags a normalization discrepancy, not a bug.
struct DpsCocycleRecord {
  int s = 0, r = 0;
  std::string generator;
  bool cocycle = false;
};
std::vector<DpsCocycleRecord> dps_cocycle_report(int n, int m);

}  // namespace artin
